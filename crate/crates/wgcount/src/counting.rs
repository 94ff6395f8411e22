//! Counting engines for `WG(n)`: exhaustive depth-first search (the oracle),
//! sum-product variable elimination (the workhorse), strict-interior counts
//! for reciprocity checks, and count series.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::graph::{elimination_order, EliminationPlan, Graph};
use crate::{Error, Result};

/// Cost ceilings for the two engines, measured in table states.
#[derive(Clone, Copy, Debug)]
pub struct EngineLimits {
    /// Max assignments explored by brute force.
    pub brute_states: f64,
    /// Max entries in a single elimination table.
    pub elim_states: f64,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            brute_states: 1e7,
            elim_states: 1e8,
        }
    }
}

/// Engine selection for `count_with`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Brute,
    Elim,
}

/// Exhaustive count of `α ∈ [0..n]^m` with `α_i + α_j <= n` on every edge.
/// Vertex `v` ranges over `[0, n - max(earlier neighbors)]`.
pub fn count_brute(g: &Graph, n: u32) -> Result<BigInt> {
    count_brute_bounded(g, n, EngineLimits::default().brute_states)
}

pub fn count_brute_bounded(g: &Graph, n: u32, ceiling: f64) -> Result<BigInt> {
    let m = g.vertex_count();
    let states = ((n + 1) as f64).powi(m as i32);
    if states > ceiling {
        return Err(Error::CostGuard(format!(
            "brute force would visit ~{states:.2e} assignments (> {ceiling:.0e}); \
             use the elimination engine"
        )));
    }
    let earlier = earlier_neighbors(g);
    let mut vals = vec![0i64; m];
    Ok(BigInt::from(brute_rec(
        0,
        n as i64,
        &earlier,
        &mut vals,
    )))
}

fn earlier_neighbors(g: &Graph) -> Vec<Vec<usize>> {
    let mut earlier = vec![Vec::new(); g.vertex_count()];
    for &(a, b) in g.edges() {
        earlier[b].push(a); // a < b by normalization
    }
    earlier
}

fn brute_rec(v: usize, n: i64, earlier: &[Vec<usize>], vals: &mut Vec<i64>) -> u128 {
    let m = earlier.len();
    if v == m {
        return 1;
    }
    let ub = earlier[v]
        .iter()
        .map(|&u| n - vals[u])
        .min()
        .unwrap_or(n)
        .min(n);
    if ub < 0 {
        return 0;
    }
    if v == m - 1 {
        return (ub + 1) as u128;
    }
    let mut acc = 0u128;
    for x in 0..=ub {
        vals[v] = x;
        acc += brute_rec(v + 1, n, earlier, vals);
    }
    acc
}

/// Strict-interior count: `1 <= α_i <= n-1` for every vertex and
/// `α_i + α_j <= n-1` on every edge.
pub fn count_interior(g: &Graph, n: u32) -> BigInt {
    assert!(n >= 1, "interior count requires n >= 1");
    let m = g.vertex_count();
    if m == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::zero();
    }
    let earlier = earlier_neighbors(g);
    let mut vals = vec![0i64; m];
    BigInt::from(interior_rec(0, n as i64, &earlier, &mut vals))
}

fn interior_rec(v: usize, n: i64, earlier: &[Vec<usize>], vals: &mut Vec<i64>) -> u128 {
    let m = earlier.len();
    if v == m {
        return 1;
    }
    let ub = earlier[v]
        .iter()
        .map(|&u| n - 1 - vals[u])
        .min()
        .unwrap_or(n - 1)
        .min(n - 1);
    if ub < 1 {
        return 0;
    }
    if v == m - 1 {
        return ub as u128; // values 1..=ub
    }
    let mut acc = 0u128;
    for x in 1..=ub {
        vals[v] = x;
        acc += interior_rec(v + 1, n, earlier, vals);
    }
    acc
}

/// A table over a sorted variable set; index is the little-endian mixed-radix
/// encoding of the assignment with radix `n + 1`.
struct Factor {
    vars: Vec<usize>,
    table: Vec<BigInt>,
}

/// Sum-product variable elimination along the plan's order. Equals
/// `count_brute` on every input; disconnected graphs factor naturally into a
/// product of per-component scalars.
pub fn count_elim(g: &Graph, n: u32, plan: &EliminationPlan) -> Result<BigInt> {
    count_elim_bounded(g, n, plan, EngineLimits::default().elim_states)
}

pub fn count_elim_bounded(
    g: &Graph,
    n: u32,
    plan: &EliminationPlan,
    ceiling: f64,
) -> Result<BigInt> {
    let m = g.vertex_count();
    let mut sorted = plan.order.clone();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(
            "elimination order is not a permutation of the vertices".into(),
        ));
    }
    let d = (n + 1) as usize;
    let table_bound = (d as f64).powi(plan.width as i32 + 1);
    if table_bound > ceiling {
        return Err(Error::CostGuard(format!(
            "elimination tables would hold ~{table_bound:.2e} states (> {ceiling:.0e})"
        )));
    }

    let mut factors: Vec<Factor> = Vec::new();
    // unary all-ones factor per vertex so isolated vertices are counted
    for v in 0..m {
        factors.push(Factor {
            vars: vec![v],
            table: vec![BigInt::one(); d],
        });
    }
    for &(a, b) in g.edges() {
        let (lo, hi) = (a.min(b), a.max(b));
        let mut table = vec![BigInt::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                if i + j <= n as usize {
                    table[i + d * j] = BigInt::one(); // vars [lo, hi]
                }
            }
        }
        factors.push(Factor {
            vars: vec![lo, hi],
            table,
        });
    }

    for &v in &plan.order {
        let (involved, rest): (Vec<Factor>, Vec<Factor>) =
            factors.into_iter().partition(|f| f.vars.contains(&v));
        factors = rest;
        factors.push(eliminate(v, involved, d, ceiling)?);
    }

    // all variables eliminated: only scalar factors remain
    let mut result = BigInt::one();
    for f in factors {
        debug_assert!(f.vars.is_empty());
        result *= &f.table[0];
    }
    Ok(result)
}

fn eliminate(v: usize, involved: Vec<Factor>, d: usize, ceiling: f64) -> Result<Factor> {
    let mut union: Vec<usize> = involved
        .iter()
        .flat_map(|f| f.vars.iter().copied())
        .collect();
    union.sort_unstable();
    union.dedup();
    if (d as f64).powi(union.len() as i32) > ceiling {
        return Err(Error::CostGuard(format!(
            "joint table over {} variables exceeds the state ceiling",
            union.len()
        )));
    }
    let rest: Vec<usize> = union.iter().copied().filter(|&u| u != v).collect();
    let v_pos = union.iter().position(|&u| u == v).unwrap();

    // per-factor strides relative to union positions
    let strides: Vec<Vec<(usize, usize)>> = involved
        .iter()
        .map(|f| {
            f.vars
                .iter()
                .enumerate()
                .map(|(pos, var)| {
                    (
                        union.iter().position(|u| u == var).unwrap(),
                        d.pow(pos as u32),
                    )
                })
                .collect()
        })
        .collect();
    // result strides: union position -> stride in the marginalized table
    let mut rest_stride = vec![0usize; union.len()];
    for (pos, var) in rest.iter().enumerate() {
        let upos = union.iter().position(|u| u == var).unwrap();
        rest_stride[upos] = d.pow(pos as u32);
    }

    let mut table = vec![BigInt::zero(); d.pow(rest.len() as u32)];
    let total = d.pow(union.len() as u32);
    let mut assign = vec![0usize; union.len()];
    for cell in 0..total {
        // decode the mixed-radix cell index
        let mut rem = cell;
        for a in assign.iter_mut() {
            *a = rem % d;
            rem /= d;
        }
        let mut product = BigInt::one();
        let mut zero = false;
        for (f, st) in involved.iter().zip(&strides) {
            let idx: usize = st.iter().map(|&(upos, stride)| assign[upos] * stride).sum();
            let val = &f.table[idx];
            if val.is_zero() {
                zero = true;
                break;
            }
            if !val.is_one() {
                product *= val;
            }
        }
        if zero {
            continue;
        }
        let out: usize = (0..union.len())
            .filter(|&p| p != v_pos)
            .map(|p| assign[p] * rest_stride[p])
            .sum();
        table[out] += product;
    }
    Ok(Factor { vars: rest, table })
}

/// Engine dispatch: brute force when the assignment space is small, variable
/// elimination otherwise.
pub fn count_auto(g: &Graph, n: u32) -> Result<BigInt> {
    count_with(g, n, Method::Auto, EngineLimits::default())
}

pub fn count_with(g: &Graph, n: u32, method: Method, limits: EngineLimits) -> Result<BigInt> {
    match method {
        Method::Brute => count_brute_bounded(g, n, limits.brute_states),
        Method::Elim => count_elim_bounded(g, n, &elimination_order(g), limits.elim_states),
        Method::Auto => {
            let states = ((n + 1) as f64).powi(g.vertex_count() as i32);
            if states <= limits.brute_states {
                count_brute_bounded(g, n, limits.brute_states)
            } else {
                count_elim_bounded(g, n, &elimination_order(g), limits.elim_states)
            }
        }
    }
}

/// `[WG(0), ..., WG(terms-1)]`; entries are evaluated independently (and in
/// parallel), so the result does not depend on the engine or scheduling.
pub fn series(g: &Graph, terms: usize) -> Result<Vec<BigInt>> {
    series_with(g, terms, Method::Auto, EngineLimits::default())
}

pub fn series_with(
    g: &Graph,
    terms: usize,
    method: Method,
    limits: EngineLimits,
) -> Result<Vec<BigInt>> {
    if terms < 1 {
        return Err(Error::InvalidArgument("series needs at least one term".into()));
    }
    (0..terms as u32)
        .into_par_iter()
        .map(|n| count_with(g, n, method, limits))
        .collect()
}

/// Independent-set count by direct subset enumeration; the cross-check oracle
/// for `WG(1)`.
pub fn independent_set_count(g: &Graph) -> BigInt {
    let m = g.vertex_count();
    assert!(m <= 24, "subset enumeration limited to small graphs");
    let mut count = 0u64;
    'outer: for mask in 0u32..(1 << m) {
        for &(a, b) in g.edges() {
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                continue 'outer;
            }
        }
        count += 1;
    }
    BigInt::from(count)
}
