//! Graph representation, parsing (document format and the family DSL), and
//! structural analysis: bipartiteness witnesses, connected components, greedy
//! elimination orders.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Simple undirected graph on vertices `0..m`. Edges are stored as ordered
/// pairs `(i, j)` with `i < j`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    edges: Vec<(usize, usize)>,
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    m: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Validates and normalizes: endpoints in range, no self-loops, no
    /// duplicates, edges sorted with `i < j`.
    pub fn new(
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        label: Option<String>,
    ) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::GraphParse(format!("self-loop at vertex {a}")));
            }
            if a >= m || b >= m {
                return Err(Error::GraphParse(format!(
                    "edge ({a},{b}) has endpoint >= m = {m}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::GraphParse(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
        }
        Ok(Graph {
            m,
            edges: seen.into_iter().collect(),
            label,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn to_document(&self) -> String {
        serde_json::to_string(&GraphDoc {
            m: self.m,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("graph document serialization cannot fail")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => f.write_str(l),
            None => f.write_str(&self.to_document()),
        }
    }
}

/// Named graph families; the single source of truth for the constructions
/// shared between the CLI, the tables, and the tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Null,
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Discrete(usize),
    Biclique(usize, usize),
    Hypercube(usize),
    Octahedron,
    Grid(usize, usize),
}

impl Family {
    pub fn parse(spec: &str) -> Result<Family> {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let nums: Vec<usize> = match params {
            None => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|s| {
                    s.trim().parse::<usize>().map_err(|_| {
                        Error::FamilyParams(format!("invalid parameter {s:?} in {spec:?}"))
                    })
                })
                .collect::<Result<_>>()?,
        };
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::FamilyParams(format!(
                    "{name} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let fam = match name {
            "null" => {
                want(0)?;
                Family::Null
            }
            "path" => {
                want(1)?;
                if nums[0] < 1 {
                    return Err(Error::FamilyParams("path:k requires k >= 1".into()));
                }
                Family::Path(nums[0])
            }
            "cycle" => {
                want(1)?;
                if nums[0] < 1 {
                    return Err(Error::FamilyParams("cycle:k requires k >= 1".into()));
                }
                Family::Cycle(nums[0])
            }
            "complete" => {
                want(1)?;
                Family::Complete(nums[0])
            }
            "star" => {
                want(1)?;
                Family::Star(nums[0])
            }
            "discrete" => {
                want(1)?;
                Family::Discrete(nums[0])
            }
            "biclique" => {
                want(2)?;
                Family::Biclique(nums[0], nums[1])
            }
            "hypercube" => {
                want(1)?;
                Family::Hypercube(nums[0])
            }
            "octahedron" => {
                want(0)?;
                Family::Octahedron
            }
            "grid" => {
                want(2)?;
                if nums[0] < 1 || nums[1] < 1 {
                    return Err(Error::FamilyParams("grid:p,q requires p,q >= 1".into()));
                }
                Family::Grid(nums[0], nums[1])
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(fam)
    }

    pub fn dsl(&self) -> String {
        match self {
            Family::Null => "null".into(),
            Family::Path(k) => format!("path:{k}"),
            Family::Cycle(k) => format!("cycle:{k}"),
            Family::Complete(t) => format!("complete:{t}"),
            Family::Star(t) => format!("star:{t}"),
            Family::Discrete(t) => format!("discrete:{t}"),
            Family::Biclique(p, q) => format!("biclique:{p},{q}"),
            Family::Hypercube(d) => format!("hypercube:{d}"),
            Family::Octahedron => "octahedron".into(),
            Family::Grid(p, q) => format!("grid:{p},{q}"),
        }
    }

    pub fn graph(&self) -> Graph {
        let build = |m: usize, edges: Vec<(usize, usize)>| {
            Graph::new(m, edges, Some(self.dsl()))
                .expect("family constructions are valid by definition")
        };
        match *self {
            Family::Null => build(0, vec![]),
            Family::Path(k) => build(k, (1..k).map(|i| (i - 1, i)).collect()),
            Family::Cycle(1) => build(1, vec![]),
            Family::Cycle(2) => build(2, vec![(0, 1)]),
            Family::Cycle(k) => {
                let mut e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                e.push((0, k - 1));
                build(k, e)
            }
            Family::Complete(t) => {
                let mut e = Vec::new();
                for i in 0..t {
                    for j in i + 1..t {
                        e.push((i, j));
                    }
                }
                build(t, e)
            }
            Family::Star(t) => build(t + 1, (1..=t).map(|i| (0, i)).collect()),
            Family::Discrete(t) => build(t, vec![]),
            Family::Biclique(p, q) => {
                let mut e = Vec::new();
                for i in 0..p {
                    for j in 0..q {
                        e.push((i, p + j));
                    }
                }
                build(p + q, e)
            }
            Family::Hypercube(d) => {
                let m = 1usize << d;
                let mut e = Vec::new();
                for v in 0..m {
                    for b in 0..d {
                        let w = v ^ (1 << b);
                        if v < w {
                            e.push((v, w));
                        }
                    }
                }
                build(m, e)
            }
            // K_{2,2,2}: the complement of a perfect matching on six vertices.
            Family::Octahedron => {
                let mut e = Vec::new();
                for i in 0..6 {
                    for j in i + 1..6 {
                        if !(j == i + 1 && i % 2 == 0) {
                            e.push((i, j));
                        }
                    }
                }
                build(6, e)
            }
            Family::Grid(p, q) => {
                let mut e = Vec::new();
                for r in 0..p {
                    for c in 0..q {
                        let v = r * q + c;
                        if c + 1 < q {
                            e.push((v, v + 1));
                        }
                        if r + 1 < p {
                            e.push((v, v + q));
                        }
                    }
                }
                build(p * q, e)
            }
        }
    }
}

/// Builds the standard graph of a family from its DSL string.
pub fn family(spec: &str) -> Result<Graph> {
    Ok(Family::parse(spec)?.graph())
}

/// Parses either a family DSL string or a graph document
/// (`{"m":..,"edges":[[i,j],..]}`).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(t)
            .map_err(|e| Error::GraphParse(format!("malformed graph document: {e}")))?;
        Graph::new(doc.m, doc.edges.iter().map(|e| (e[0], e[1])), None)
    } else {
        family(t)
    }
}

/// Either a proper 2-coloring or an odd closed walk certifying the absence of
/// one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteWitness {
    /// `coloring[v]` in {0, 1}, no monochromatic edge.
    Coloring(Vec<u8>),
    /// Cycle as a vertex sequence of odd length; consecutive vertices (and
    /// last-to-first) are adjacent.
    OddCycle(Vec<usize>),
}

/// BFS 2-coloring; on failure returns an explicit odd cycle.
pub fn is_bipartite(g: &Graph) -> (bool, BipartiteWitness) {
    let adj = g.adjacency();
    let m = g.vertex_count();
    let mut color = vec![u8::MAX; m];
    let mut parent = vec![usize::MAX; m];
    for start in 0..m {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return (false, BipartiteWitness::OddCycle(odd_cycle(&parent, u, v)));
                }
            }
        }
    }
    (true, BipartiteWitness::Coloring(color))
}

fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    // strip the common tail above the lowest common ancestor
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
        i -= 1;
        j -= 1;
    }
    // u .. lca followed by lca-side of v reversed back down to v
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pv[..j].iter().rev());
    cycle
}

/// A connected component together with the map from local to original
/// vertex indices.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// `vertex_map[local] = original`.
    pub vertex_map: Vec<usize>,
}

/// Connected components in ascending order of smallest original vertex.
pub fn components(g: &Graph) -> Vec<Component> {
    let adj = g.adjacency();
    let m = g.vertex_count();
    let mut comp_id = vec![usize::MAX; m];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp_id[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if comp_id[v] == usize::MAX {
                    comp_id[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
        .into_iter()
        .map(|members| {
            let local: std::collections::HashMap<usize, usize> = members
                .iter()
                .enumerate()
                .map(|(l, &orig)| (orig, l))
                .collect();
            let edges = g
                .edges()
                .iter()
                .filter(|e| local.contains_key(&e.0))
                .map(|&(a, b)| (local[&a], local[&b]));
            Component {
                graph: Graph::new(members.len(), edges, None)
                    .expect("component of a valid graph is valid"),
                vertex_map: members,
            }
        })
        .collect()
}

/// Vertex elimination order and the induced width it achieves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationPlan {
    pub order: Vec<usize>,
    pub width: usize,
}

/// Greedy min-degree order on the progressively chordalized graph; ties break
/// toward the smallest vertex index. Width is the largest neighbor set seen
/// at elimination time.
pub fn elimination_order(g: &Graph) -> EliminationPlan {
    let m = g.vertex_count();
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for &(a, b) in g.edges() {
        nbrs[a].insert(b);
        nbrs[b].insert(a);
    }
    let mut alive: BTreeSet<usize> = (0..m).collect();
    let mut order = Vec::with_capacity(m);
    let mut width = 0;
    while let Some(&v) = alive.iter().min_by_key(|&&v| (nbrs[v].len(), v)) {
        let vn: Vec<usize> = nbrs[v].iter().copied().collect();
        width = width.max(vn.len());
        for &a in &vn {
            nbrs[a].remove(&v);
        }
        for i in 0..vn.len() {
            for j in i + 1..vn.len() {
                nbrs[vn[i]].insert(vn[j]);
                nbrs[vn[j]].insert(vn[i]);
            }
        }
        alive.remove(&v);
        order.push(v);
    }
    EliminationPlan { order, width }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_document_single_edge() {
        let g = parse_graph(r#"{"m":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parse_family_cycle() {
        let g = parse_graph("cycle:4").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_example_310_graph() {
        let g =
            parse_graph(r#"{"m":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4],[0,2]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges().len(), 6);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_graph(r#"{"m":2,"edges":[[0,2]]}"#).is_err());
        assert!(parse_graph(r#"{"m":3,"edges":[[1,1]]}"#).is_err());
        assert!(parse_graph(r#"{"m":3,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(parse_graph("dodecahedron").is_err());
        assert!(parse_graph("path:0").is_err());
        assert!(parse_graph("biclique:2").is_err());
    }

    #[test]
    fn families_basic_shapes() {
        assert_eq!(family("discrete:4").unwrap().vertex_count(), 4);
        assert_eq!(family("discrete:4").unwrap().edges().len(), 0);
        let oct = family("octahedron").unwrap();
        assert_eq!(oct.vertex_count(), 6);
        assert_eq!(oct.edges().len(), 12);
        let cube = family("hypercube:3").unwrap();
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.edges().len(), 12);
        assert_eq!(family("cycle:1").unwrap().edges().len(), 0);
        assert_eq!(family("cycle:2").unwrap().edges(), &[(0, 1)]);
        assert_eq!(family("star:3").unwrap().edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(family("grid:2,3").unwrap().edges().len(), 7);
        assert_eq!(family("null").unwrap().vertex_count(), 0);
    }

    fn check_witness(g: &Graph) {
        let (flag, witness) = is_bipartite(g);
        match witness {
            BipartiteWitness::Coloring(c) => {
                assert!(flag);
                for &(a, b) in g.edges() {
                    assert_ne!(c[a], c[b]);
                }
            }
            BipartiteWitness::OddCycle(cyc) => {
                assert!(!flag);
                assert_eq!(cyc.len() % 2, 1);
                let has_edge = |a: usize, b: usize| {
                    g.edges().contains(&(a.min(b), a.max(b)))
                };
                for w in cyc.windows(2) {
                    assert!(has_edge(w[0], w[1]));
                }
                assert!(has_edge(cyc[0], *cyc.last().unwrap()));
            }
        }
    }

    #[test]
    fn bipartite_witnesses() {
        check_witness(&family("cycle:4").unwrap());
        check_witness(&family("cycle:3").unwrap());
        check_witness(&family("octahedron").unwrap());
        check_witness(&family("hypercube:3").unwrap());
        let g =
            parse_graph(r#"{"m":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4],[0,2]]}"#).unwrap();
        let (flag, _) = is_bipartite(&g);
        assert!(!flag);
        check_witness(&g);
        assert!(is_bipartite(&family("cycle:4").unwrap()).0);
        assert!(!is_bipartite(&family("cycle:3").unwrap()).0);
    }

    #[test]
    fn components_partition() {
        let g = parse_graph(r#"{"m":4,"edges":[[0,1],[2,3]]}"#).unwrap();
        let comps = components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertex_map, vec![0, 1]);
        assert_eq!(comps[1].vertex_map, vec![2, 3]);
        assert_eq!(comps[0].graph.edges(), &[(0, 1)]);

        assert_eq!(components(&family("cycle:5").unwrap()).len(), 1);
        assert_eq!(components(&family("discrete:3").unwrap()).len(), 3);

        // every vertex and edge appears exactly once
        let total_edges: usize = comps.iter().map(|c| c.graph.edges().len()).sum();
        assert_eq!(total_edges, g.edges().len());
    }

    #[test]
    fn elimination_widths() {
        assert_eq!(elimination_order(&family("path:5").unwrap()).width, 1);
        assert_eq!(elimination_order(&family("cycle:4").unwrap()).width, 2);
        let plan = elimination_order(&family("hypercube:3").unwrap());
        assert!(plan.width <= 4, "width {} too large", plan.width);
        let mut sorted = plan.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..8).collect::<Vec<_>>());
    }
}
