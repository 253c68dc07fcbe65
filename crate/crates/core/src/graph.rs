//! Mixed graphs: undirected edges plus directed arcs, at most one connection
//! per vertex pair, and builders for the named families used throughout.

use crate::error::GraphError;
use crate::gauss::GaussianUnit;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A mixed graph on vertices 0..n-1.
///
/// Immutable after construction; all operations return new graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedGraph {
    n: usize,
    undirected: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
}

/// A walk given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSpec {
    pub vertices: Vec<usize>,
}

impl WalkSpec {
    pub fn new(vertices: Vec<usize>) -> Self {
        WalkSpec { vertices }
    }
}

/// Summary of the coarse structure of a mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub components: Vec<Vec<usize>>,
    /// n - c.
    pub rank: usize,
    /// m - n + c.
    pub corank: usize,
}

impl MixedGraph {
    /// Validates and builds a mixed graph.
    pub fn build(
        n: usize,
        undirected: &[(usize, usize)],
        arcs: &[(usize, usize)],
    ) -> Result<MixedGraph, GraphError> {
        let mut und = BTreeSet::new();
        let mut arc = BTreeSet::new();
        let mut seen_pairs = BTreeSet::new();
        let mut check = |u: usize, v: usize| -> Result<(usize, usize), GraphError> {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen_pairs.insert(key) {
                return Err(GraphError::ConflictingEdge { u: key.0, v: key.1 });
            }
            Ok(key)
        };
        for &(u, v) in undirected {
            let key = check(u, v)?;
            und.insert(key);
        }
        for &(u, v) in arcs {
            check(u, v)?;
            arc.insert((u, v));
        }
        Ok(MixedGraph {
            n,
            undirected: und,
            arcs: arc,
        })
    }

    /// A graph with no edges.
    pub fn empty(n: usize) -> MixedGraph {
        MixedGraph {
            n,
            undirected: BTreeSet::new(),
            arcs: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.undirected.len() + self.arcs.len()
    }

    pub fn undirected_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.undirected.iter().copied()
    }

    pub fn arc_list(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    /// All incident pairs as unordered (u, v) with u < v, regardless of kind.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.undirected.iter().copied().collect();
        out.extend(self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))));
        out.sort_unstable();
        out
    }

    /// Hermitian entry H[u][v].
    pub fn entry(&self, u: usize, v: usize) -> GaussianUnit {
        let key = (u.min(v), u.max(v));
        if self.undirected.contains(&key) {
            GaussianUnit::One
        } else if self.arcs.contains(&(u, v)) {
            GaussianUnit::I
        } else if self.arcs.contains(&(v, u)) {
            GaussianUnit::MinusI
        } else {
            GaussianUnit::Zero
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        !self.entry(u, v).is_zero()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adjacent(u, v)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.adjacent(u, v)).count()
    }

    pub fn structure(&self) -> Structure {
        let components = self.components();
        let c = components.len();
        let m = self.size();
        Structure {
            order: self.n,
            size: m,
            max_degree: (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0),
            rank: self.n - c,
            corank: m + c - self.n,
            components,
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Replaces every arc by an undirected edge.
    pub fn underlying(&self) -> MixedGraph {
        let mut und = self.undirected.clone();
        for &(u, v) in &self.arcs {
            und.insert((u.min(v), u.max(v)));
        }
        MixedGraph {
            n: self.n,
            undirected: und,
            arcs: BTreeSet::new(),
        }
    }

    /// Subgraph induced on `vertices`, renumbered order-preservingly.
    pub fn induced(&self, vertices: &[usize]) -> MixedGraph {
        let mut sorted: Vec<usize> = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let index: BTreeMap<usize, usize> =
            sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut und = BTreeSet::new();
        let mut arcs = BTreeSet::new();
        for &(u, v) in &self.undirected {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                und.insert((a.min(b), a.max(b)));
            }
        }
        for &(u, v) in &self.arcs {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                arcs.insert((a, b));
            }
        }
        MixedGraph {
            n: sorted.len(),
            undirected: und,
            arcs,
        }
    }

    /// Deletes one vertex; remaining vertices are renumbered.
    pub fn delete_vertex(&self, u: usize) -> MixedGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != u).collect();
        self.induced(&keep)
    }

    pub fn delete_vertices(&self, del: &[usize]) -> MixedGraph {
        let del: BTreeSet<usize> = del.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !del.contains(v)).collect();
        self.induced(&keep)
    }

    /// Removes the connection between u and v (whatever its kind), keeping
    /// all vertices.
    pub fn delete_edge(&self, u: usize, v: usize) -> MixedGraph {
        let key = (u.min(v), u.max(v));
        let mut g = self.clone();
        g.undirected.remove(&key);
        g.arcs.remove(&(u, v));
        g.arcs.remove(&(v, u));
        g
    }

    /// Disjoint union; vertices of `other` are shifted by self.n.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let k = self.n;
        let mut und = self.undirected.clone();
        let mut arcs = self.arcs.clone();
        for &(u, v) in &other.undirected {
            und.insert((u + k, v + k));
        }
        for &(u, v) in &other.arcs {
            arcs.insert((u + k, v + k));
        }
        MixedGraph {
            n: k + other.n,
            undirected: und,
            arcs,
        }
    }

    /// Applies a vertex permutation: vertex v of self becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n);
        let mut und = BTreeSet::new();
        let mut arcs = BTreeSet::new();
        for &(u, v) in &self.undirected {
            let (a, b) = (perm[u], perm[v]);
            und.insert((a.min(b), a.max(b)));
        }
        for &(u, v) in &self.arcs {
            arcs.insert((perm[u], perm[v]));
        }
        MixedGraph {
            n: self.n,
            undirected: und,
            arcs,
        }
    }

    /// Value of a walk: the product of Hermitian entries along it.
    pub fn walk_value(&self, walk: &WalkSpec) -> Result<GaussianUnit, GraphError> {
        let mut value = GaussianUnit::One;
        for pair in walk.vertices.windows(2) {
            let (u, v) = (pair[0], pair[1]);
            if u >= self.n || v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    order: self.n,
                });
            }
            let h = self.entry(u, v);
            if h.is_zero() {
                return Err(GraphError::NotAWalk { u, v });
            }
            value = value * h;
        }
        Ok(value)
    }

    /// Value of a cycle given as a vertex list (closing edge implied).
    pub fn cycle_value(&self, cycle: &[usize]) -> Result<GaussianUnit, GraphError> {
        let mut verts = cycle.to_vec();
        verts.push(cycle[0]);
        self.walk_value(&WalkSpec::new(verts))
    }

    /// Serializes to the graph JSON format.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "undirected": self.undirected.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
            "arcs": self.arcs.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
        })
    }

    /// Parses the graph JSON format, enforcing u < v in "undirected".
    pub fn from_json(v: &Value) -> Result<MixedGraph, GraphError> {
        let obj = v
            .as_object()
            .ok_or_else(|| GraphError::Parse("expected a JSON object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| GraphError::Parse("field \"n\" must be a non-negative integer".into()))?
            as usize;
        let read_pairs = |field: &str, require_sorted: bool| -> Result<Vec<(usize, usize)>, GraphError> {
            let arr = match obj.get(field) {
                Some(Value::Array(a)) => a,
                None => return Ok(Vec::new()),
                Some(_) => {
                    return Err(GraphError::Parse(format!(
                        "field \"{field}\" must be an array of pairs"
                    )))
                }
            };
            let mut out = Vec::with_capacity(arr.len());
            for (idx, item) in arr.iter().enumerate() {
                let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                    GraphError::Parse(format!("{field}[{idx}] must be a pair [u, v]"))
                })?;
                let u = pair[0].as_u64().ok_or_else(|| {
                    GraphError::Parse(format!("{field}[{idx}][0] must be an integer"))
                })? as usize;
                let v = pair[1].as_u64().ok_or_else(|| {
                    GraphError::Parse(format!("{field}[{idx}][1] must be an integer"))
                })? as usize;
                if require_sorted && u >= v {
                    return Err(GraphError::Parse(format!(
                        "{field}[{idx}] must satisfy u < v, got [{u}, {v}]"
                    )));
                }
                out.push((u, v));
            }
            Ok(out)
        };
        let undirected = read_pairs("undirected", true)?;
        let arcs = read_pairs("arcs", false)?;
        MixedGraph::build(n, &undirected, &arcs)
    }
}

/// Path on n vertices: 0-1-...-(n-1), all undirected.
pub fn path(n: usize) -> MixedGraph {
    assert!(n >= 1, "path needs at least one vertex");
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    MixedGraph::build(n, &edges, &[]).expect("path construction is valid")
}

/// Mixed cycle on vertices 0-1-...-(n-1)-0.
///
/// * kind 0: all edges undirected.
/// * kind 1: one arc (0,1), the rest undirected.
/// * kind 2: arcs (0,1) and (1,2), the rest undirected.
pub fn cycle(n: usize, kind: u8) -> Result<MixedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let ring: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let (arcs, undirected): (Vec<_>, Vec<_>) = match kind {
        0 => (vec![], ring),
        1 => (vec![ring[0]], ring[1..].to_vec()),
        2 => (vec![ring[0], ring[1]], ring[2..].to_vec()),
        other => {
            return Err(GraphError::BadParameter(format!(
                "cycle kind must be 0, 1 or 2, got {other}"
            )))
        }
    };
    MixedGraph::build(n, &undirected, &arcs)
}

/// Theta graph: three internally disjoint paths of p, q and r vertices
/// (counting both shared endpoints). Labels: endpoints 0 and 1; the interior
/// of the first path is 2.., then the second, then the third. Optional arcs
/// reorient existing connections of the underlying graph.
pub fn theta(p: usize, q: usize, r: usize, arcs: &[(usize, usize)]) -> Result<MixedGraph, GraphError> {
    if p < 2 || q < 2 || r < 2 {
        return Err(GraphError::BadParameter(format!(
            "theta needs p, q, r >= 2, got ({p}, {q}, {r})"
        )));
    }
    if [p, q, r].iter().filter(|&&x| x == 2).count() > 1 {
        return Err(GraphError::BadParameter(
            "at most one branch of a theta graph may be a bare edge".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = 2;
    for &len in &[p, q, r] {
        // len vertices including endpoints 0 and 1, so len - 2 interior ones.
        let interior = len - 2;
        if interior == 0 {
            edges.push((0, 1));
        } else {
            edges.push((0, next));
            for i in 0..interior - 1 {
                edges.push((next + i, next + i + 1));
            }
            edges.push((next + interior - 1, 1));
            next += interior;
        }
    }
    let g = MixedGraph::build(p + q + r - 4, &edges, &[])?;
    apply_orientation(&g, arcs)
}

/// Reorients chosen connections of an undirected graph as arcs.
pub fn apply_orientation(g: &MixedGraph, arcs: &[(usize, usize)]) -> Result<MixedGraph, GraphError> {
    let mut und: Vec<(usize, usize)> = g.undirected_edges().collect();
    let mut out_arcs: Vec<(usize, usize)> = g.arc_list().collect();
    for &(u, v) in arcs {
        let key = (u.min(v), u.max(v));
        let pos = und
            .iter()
            .position(|&e| e == key)
            .ok_or(GraphError::NotAnEdge { u, v })?;
        und.remove(pos);
        out_arcs.push((u, v));
    }
    MixedGraph::build(g.order(), &und, &out_arcs)
}

/// The two-arc 4-cycle with a pendant path of t vertices.
///
/// Labels: the cycle is 0-1-2-3 with arcs (0,1) and (1,2); the path is
/// 4..4+t-1 and its first vertex is joined to cycle vertex 3.
pub fn g_t(t: usize) -> Result<MixedGraph, GraphError> {
    if t < 1 {
        return Err(GraphError::BadParameter("g_t needs t >= 1".into()));
    }
    let cycle4 = cycle(4, 2)?;
    let tail = path(t);
    let mut g = cycle4.disjoint_union(&tail);
    g.undirected.insert((3, 4));
    Ok(g)
}

/// The two-arc 4-cycle with pendant paths of t and t+m vertices attached to
/// the two opposite cycle vertices 3 and 1.
///
/// Labels: cycle 0-1-2-3 with arcs (0,1) and (1,2); the t-path occupies
/// 4..t+3 hanging off vertex 3; the (t+m)-path occupies t+4..2t+m+3 hanging
/// off vertex 1.
pub fn g_t_tm(t: usize, m: usize) -> Result<MixedGraph, GraphError> {
    if t < 1 {
        return Err(GraphError::BadParameter("g_t_tm needs t >= 1".into()));
    }
    let mut g = g_t(t)?;
    let second = path(t + m);
    let offset = g.n;
    g = g.disjoint_union(&second);
    g.undirected.insert((1, offset));
    Ok(g)
}

/// The n-vertex tree made of a path on n-1 vertices with one extra leaf
/// attached beside an end: path 0-1-...-(n-2) plus the edge {1, n-1}.
///
/// Exhaustive search over all trees of each order shows this is the unique
/// tree whose spectrum is {0} together with 2cos((2k+1)pi/(2n-2)).
pub fn d_tree(n: usize) -> Result<MixedGraph, GraphError> {
    if n < 4 {
        return Err(GraphError::BadParameter("d_tree needs n >= 4".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
    edges.push((1, n - 1));
    MixedGraph::build(n, &edges, &[])
}

/// Complete graph, all edges undirected.
pub fn complete(n: usize) -> MixedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    MixedGraph::build(n, &edges, &[]).expect("complete graph is valid")
}

/// Star with c leaves around center 0.
pub fn star(c: usize) -> MixedGraph {
    let edges: Vec<(usize, usize)> = (1..=c).map(|v| (0, v)).collect();
    MixedGraph::build(c + 1, &edges, &[]).expect("star is valid")
}
