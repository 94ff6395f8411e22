use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Polynomial;
use crate::genfun::{canonical_from_series, RationalGf};
use crate::graph::Family;
use crate::{Error, Result};

use super::eulerian::eulerian_poly;
use super::octahedron::octa_count;
use super::transfer::{cycle_count, path_count};

fn pow_sum(limit: u64, t: u32) -> BigInt {
    (1..=limit).map(|k| BigInt::from(k).pow(t)).sum()
}

/// Closed-form `WG(n)` for the families with a proved counting formula:
/// complete, star, discrete, biclique.
pub fn family_count(family: &Family, n: u32) -> Result<BigInt> {
    let n64 = n as u64;
    match *family {
        // WK_t(n) = t Σ_{r=1}^{⌊(n+1)/2⌋} r^{t-1} + ⌊(n+2)/2⌋^t
        Family::Complete(t) => {
            if t == 0 {
                return Ok(BigInt::one());
            }
            let t = t as u32;
            Ok(BigInt::from(t) * pow_sum((n64 + 1) / 2, t - 1)
                + BigInt::from((n64 + 2) / 2).pow(t))
        }
        // WS_t(n) = Σ_{k=1}^{n+1} k^t
        Family::Star(t) => Ok((1..=n64 + 1)
            .map(|k| BigInt::from(k).pow(t as u32))
            .sum()),
        // WD_t(n) = (n+1)^t
        Family::Discrete(t) => Ok(BigInt::from(n64 + 1).pow(t as u32)),
        // WK_{p,q}(n) = Σ_{k=0}^n ((k+1)^p - k^p)(n+1-k)^q for p, q >= 1;
        // an empty side degenerates to the discrete graph
        Family::Biclique(p, q) => {
            if p == 0 || q == 0 {
                return Ok(BigInt::from(n64 + 1).pow((p + q) as u32));
            }
            let (p, q) = (p as u32, q as u32);
            let mut acc = BigInt::zero();
            for k in 0..=n64 {
                acc += (BigInt::from(k + 1).pow(p) - BigInt::from(k).pow(p))
                    * BigInt::from(n64 + 1 - k).pow(q);
            }
            Ok(acc)
        }
        _ => Err(Error::InvalidArgument(format!(
            "no counting closed form for {}",
            family.dsl()
        ))),
    }
}

/// Closed-form `WG(n)` dispatcher over every family that has one, including
/// the transfer-matrix path/cycle formulas and the octahedral trace sum.
pub fn closed_count(family: &Family, n: u32) -> Result<BigInt> {
    match *family {
        Family::Null => Ok(BigInt::one()),
        Family::Path(k) => Ok(path_count(k, n)),
        Family::Cycle(k) => Ok(cycle_count(k, n)),
        Family::Octahedron => Ok(octa_count(n)),
        Family::Complete(_) | Family::Star(_) | Family::Discrete(_) | Family::Biclique(_, _) => {
            family_count(family, n)
        }
        Family::Hypercube(_) | Family::Grid(_, _) => Err(Error::InvalidArgument(format!(
            "no closed form for {}; use the counting engines",
            family.dsl()
        ))),
    }
}

fn gf_from_counts(
    family: &Family,
    m: usize,
    count: impl Fn(u32) -> BigInt,
) -> Result<RationalGf> {
    let series: Vec<BigInt> = (0..2 * m as u32 + 4).map(count).collect();
    canonical_from_series(&series, m).map_err(|e| {
        Error::Verification(format!("closed-form series for {} :: {e}", family.dsl()))
    })
}

/// Closed-form `ρ(G)` for the supported families, in canonical form. Star,
/// biclique, and discrete graphs use the Eulerian-polynomial formulas
/// directly; paths, cycles, complete graphs, and the octahedron go through
/// reconstruction from their closed-form count series.
pub fn family_gf(family: &Family) -> Result<RationalGf> {
    match *family {
        Family::Null => RationalGf::new(Polynomial::one(), 1, 0),
        // ρ(S_t) = Ā_t(x) / (1-x)^{t+2}
        Family::Star(t) => RationalGf::new(eulerian_poly(t, true), t + 2, 0),
        // ρ(K_{p,q}) = Ā_p(x) Ā_q(x) / (1-x)^{p+q+1}
        Family::Biclique(p, q) => RationalGf::new(
            &eulerian_poly(p, true) * &eulerian_poly(q, true),
            p + q + 1,
            0,
        ),
        // ρ(D_t) = Ā_t(x) / (1-x)^{t+1}
        Family::Discrete(t) => RationalGf::new(eulerian_poly(t, true), t + 1, 0),
        Family::Path(k) => gf_from_counts(family, k, |n| path_count(k, n)),
        Family::Cycle(k) => gf_from_counts(family, k, |n| cycle_count(k, n)),
        Family::Complete(t) => gf_from_counts(family, t, |n| {
            family_count(family, n).expect("complete graphs have a closed form")
        }),
        Family::Octahedron => gf_from_counts(family, 6, octa_count),
        Family::Hypercube(_) | Family::Grid(_, _) => Err(Error::InvalidArgument(format!(
            "no closed-form GF for {}; use the reconstruction pipeline",
            family.dsl()
        ))),
    }
}
