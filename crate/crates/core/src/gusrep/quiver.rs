use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{IntMat, UsRep, ValidationReport};
use crate::fusion::FusionRing;
use crate::lie::{Family, LieAlgebra};
use crate::torus::LevelData;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverVertex {
    pub id: String,
    /// Coordinates in `Z(g)`; `None` for an ungraded quiver.
    pub grade: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverEdge {
    pub from: usize,
    pub to: usize,
    /// Index `j` of the fundamental weight `w_{j+1}` grading the edge.
    pub grade: usize,
    pub multiplicity: i64,
}

/// A quiver whose edges are graded by fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedQuiver {
    pub family: Family,
    pub rank: usize,
    pub level: u64,
    pub vertices: Vec<QuiverVertex>,
    pub edges: Vec<QuiverEdge>,
}

impl GradedQuiver {
    fn check_shape(&self) -> Result<()> {
        let nv = self.vertices.len();
        if nv == 0 {
            return Err(Error::Schema("quiver has no vertices".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= nv || e.to >= nv {
                return Err(Error::Schema(format!("edge {i} references an unknown vertex")));
            }
            if e.grade >= self.rank {
                return Err(Error::Schema(format!(
                    "edge {i} has grade_fundamental {} but rank is {}",
                    e.grade, self.rank
                )));
            }
            if e.multiplicity < 0 {
                return Err(Error::Schema(format!("edge {i} has negative multiplicity")));
            }
        }
        Ok(())
    }

    /// `Δ_w[α][β] = Σ` multiplicities of edges `β → α` graded `w`.
    pub fn adjacency(&self, w: usize) -> IntMat {
        let mut m = IntMat::zeros(self.vertices.len());
        for e in self.edges.iter().filter(|e| e.grade == w) {
            m.add_to(e.to, e.from, e.multiplicity);
        }
        m
    }

    /// Vertex grades reduced into `Z(g)`, after checking
    /// `ε(s(e)) + ε(e) = ε(t(e))` on every edge.
    pub fn checked_grading(&self, algebra: &LieAlgebra) -> Result<Option<Vec<Vec<i64>>>> {
        let graded = self.vertices.iter().filter(|v| v.grade.is_some()).count();
        if graded == 0 {
            return Ok(None);
        }
        if graded != self.vertices.len() {
            return Err(Error::Schema("either every vertex or no vertex carries a grade".into()));
        }
        let center = algebra.center();
        let orders: Vec<i64> = center.cyclic_orders().iter().map(|d| d.to_i64().unwrap()).collect();
        let grades: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| {
                let g = v.grade.as_ref().unwrap();
                if g.len() != orders.len() {
                    return Err(Error::Schema(format!(
                        "vertex {} has grade of length {}, Z(g) has {} cyclic factors",
                        v.id,
                        g.len(),
                        orders.len()
                    )));
                }
                Ok(g.iter().zip(&orders).map(|(x, d)| x.rem_euclid(*d)).collect())
            })
            .collect::<Result<_>>()?;
        let n = algebra.rank();
        for e in &self.edges {
            let mut w = vec![0i64; n];
            w[e.grade] = 1;
            let gw = center.to_coords_i64(&w);
            let ok = (0..orders.len())
                .all(|i| (grades[e.from][i] + gw[i] - grades[e.to][i]).rem_euclid(orders[i]) == 0);
            if !ok {
                return Err(Error::GradeMismatch(format!(
                    "edge {} -> {} graded w_{}",
                    self.vertices[e.from].id,
                    self.vertices[e.to].id,
                    e.grade + 1
                )));
            }
        }
        Ok(Some(grades))
    }

    pub fn is_connected(&self) -> bool {
        let nv = self.vertices.len();
        let mut adj = vec![Vec::new(); nv];
        for e in &self.edges {
            if e.multiplicity > 0 {
                adj[e.from].push(e.to);
                adj[e.to].push(e.from);
            }
        }
        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Loads the adjacency matrices as the generator images of a representation.
    pub fn to_usrep(&self, ring: Arc<FusionRing>) -> Result<UsRep> {
        self.check_shape()?;
        let alg = ring.level().algebra();
        if alg.family() != self.family || alg.rank() != self.rank {
            return Err(Error::Schema(format!(
                "quiver is over {}{}, ring over {}{}",
                self.family,
                self.rank,
                alg.family(),
                alg.rank()
            )));
        }
        if ring.level().level() != self.level {
            return Err(Error::Schema(format!(
                "quiver is at level {}, ring at level {}",
                self.level,
                ring.level().level()
            )));
        }
        let grading = self.checked_grading(alg)?;
        let fundamentals = (0..self.rank).map(|w| self.adjacency(w)).collect();
        UsRep::new(ring, fundamentals, grading)
    }
}

/// Result of checking whether a quiver is a quantum Dynkin diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct DynkinCertificate {
    pub valid: bool,
    /// Every `Π(χ̃_k)` has nonnegative entries.
    pub natural: bool,
    /// The quiver is connected.
    pub simple: bool,
    pub report: Option<ValidationReport>,
    /// Reason for rejection before validation could run.
    pub rejection: Option<Error>,
}

/// Builds the ring for the quiver's algebra and level, loads the quiver and
/// validates it. Size caps and malformed input are errors; failures of the
/// defining conditions yield an invalid certificate.
pub fn check_quantum_dynkin(quiver: &GradedQuiver, limits: &Limits) -> Result<DynkinCertificate> {
    let alg = LieAlgebra::new(quiver.family, quiver.rank)?;
    let level = LevelData::with_limits(&alg, quiver.level, limits)?;
    let ring = Arc::new(FusionRing::new(level)?);
    let simple = quiver.is_connected();
    let rep = match quiver.to_usrep(ring) {
        Ok(r) => r,
        Err(e @ Error::GradeMismatch(_)) => {
            return Ok(DynkinCertificate { valid: false, natural: false, simple, report: None, rejection: Some(e) })
        }
        Err(e) => return Err(e),
    };
    let report = rep.validate();
    Ok(DynkinCertificate {
        valid: report.all_pass(),
        natural: report.all_pass() && report.natural,
        simple,
        report: Some(report),
        rejection: None,
    })
}

/// Classifies a simple undirected graph as an ADE Dynkin diagram.
pub fn dynkin_graph_type(adj: &[Vec<i64>]) -> Result<(Family, usize)> {
    let n = adj.len();
    if n == 0 {
        return Err(Error::NotAde("empty graph".into()));
    }
    let mut edges = 0;
    for i in 0..n {
        if adj[i].len() != n {
            return Err(Error::NotAde("adjacency matrix is not square".into()));
        }
        if adj[i][i] != 0 {
            return Err(Error::NotAde("graph has a loop".into()));
        }
        for j in 0..n {
            if adj[i][j] != adj[j][i] || !(adj[i][j] == 0 || adj[i][j] == 1) {
                return Err(Error::NotAde("graph is not simple and undirected".into()));
            }
            if i < j && adj[i][j] == 1 {
                edges += 1;
            }
        }
    }
    if edges != n - 1 {
        return Err(Error::NotAde("graph is not a tree".into()));
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| adj[i][j] == 1).collect()).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &nbrs[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotAde("graph is not connected".into()));
    }
    let branch: Vec<usize> = (0..n).filter(|&i| nbrs[i].len() >= 3).collect();
    if branch.is_empty() {
        return Ok((Family::A, n));
    }
    if branch.len() > 1 || nbrs[branch[0]].len() > 3 {
        return Err(Error::NotAde("more than one branch point".into()));
    }
    let c = branch[0];
    let mut arms: Vec<usize> = nbrs[c]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next: Vec<usize> = nbrs[cur].iter().copied().filter(|&y| y != prev).collect();
                if next.is_empty() {
                    return len;
                }
                prev = cur;
                cur = next[0];
                len += 1;
            }
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => Ok((Family::D, n)),
        (1, 2, 2) | (1, 2, 3) | (1, 2, 4) => Ok((Family::E, n)),
        _ => Err(Error::NotAde(format!("arms {arms:?} violate 1/p + 1/q + 1/r > 1"))),
    }
}

/// The Dynkin diagram of a simply-laced type as an `sl_2` quiver at level
/// `h − 2`, with both orientations of every edge and the bipartite grading.
pub fn ade_quiver(family: Family, rank: usize) -> Result<GradedQuiver> {
    if !family.is_simply_laced() {
        return Err(Error::InvalidType { family: family.as_char(), rank });
    }
    let alg = LieAlgebra::new(family, rank)?;
    let cartan = alg.cartan();
    let mut color = vec![-1i64; rank];
    color[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for y in 0..rank {
            if y != x && cartan[x][y] != 0 && color[y] < 0 {
                color[y] = 1 - color[x];
                queue.push_back(y);
            }
        }
    }
    let vertices = (0..rank)
        .map(|i| QuiverVertex { id: (i + 1).to_string(), grade: Some(vec![color[i]]) })
        .collect();
    let mut edges = Vec::new();
    for x in 0..rank {
        for y in 0..rank {
            if x != y && cartan[x][y] != 0 {
                edges.push(QuiverEdge { from: x, to: y, grade: 0, multiplicity: 1 });
            }
        }
    }
    Ok(GradedQuiver {
        family: Family::A,
        rank: 1,
        level: (alg.coxeter_number() - 2) as u64,
        vertices,
        edges,
    })
}
