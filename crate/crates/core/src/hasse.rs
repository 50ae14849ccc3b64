//! Hasse graph of the abelian ideals, upper alcoves and facet volumes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::cartan::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::group::{automorphisms, GroupFingerprint};
use crate::ideals::{maximal_ideals, AbelianIdeal, IdealCatalog};
use crate::linalg::Matrix;
use crate::root_system::{RootSystem, WeightVector};
use crate::scalar::Exact;
use crate::young::{rim_string, young_of_ideal};

/// Undirected graph on the ideals (catalog order); edge `{a, b}` with `a < b`
/// carries the letter `i` with `w_b = w_a s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseGraph {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub dims: Vec<usize>,
    pub edges: BTreeMap<(usize, usize), usize>,
}

/// An alcove in `2A` with a facet on the wall `(x|theta) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperAlcoveInfo {
    pub ideal: usize,
    /// Type of the vertex off the wall.
    pub lower_vertex_type: usize,
    pub is_maximal: bool,
}

fn rho_point<Q: Exact>(rs: &RootSystem<Q>, a: &AbelianIdeal) -> WeightVector<Q> {
    rs.rho() + &a.root_sum_weight()
}

/// Pairs of ideals differing by exactly one root.
pub fn one_root_pairs(ideals: &[AbelianIdeal]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if a.dim() + 1 == b.dim() && a.is_subset_of(b) {
                out.insert((i.min(j), i.max(j)));
            }
        }
    }
    out
}

/// Covering pairs of the inclusion order.
pub fn cover_pairs(ideals: &[AbelianIdeal]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i == j || !a.is_subset_of(b) {
                continue;
            }
            let between = ideals
                .iter()
                .any(|c| c != a && c != b && a.is_subset_of(c) && c.is_subset_of(b));
            if !between {
                out.insert((i.min(j), i.max(j)));
            }
        }
    }
    out
}

/// Pairs of alcoves in `2A` sharing a facet, found by reflecting each alcove in its walls.
pub fn alcove_adjacent_pairs<Q: Exact>(rs: &RootSystem<Q>, cat: &IdealCatalog) -> Result<BTreeSet<(usize, usize)>> {
    let by_point: HashMap<WeightVector<Q>, usize> =
        cat.ideals().iter().enumerate().map(|(k, a)| (rho_point(rs, a), k)).collect();
    let mut out = BTreeSet::new();
    for k in 0..cat.len() {
        for i in 0..=rs.rank() {
            let p = rs.apply_affine(&cat.word(k).push(i), rs.rho());
            if !rs.in_2a(&p)? {
                continue;
            }
            let j = *by_point
                .get(&p)
                .ok_or_else(|| Error::InvariantViolation("alcove in 2A without an ideal".into()))?;
            out.insert((k.min(j), k.max(j)));
        }
    }
    Ok(out)
}

impl HasseGraph {
    /// Edges by the one-root rule, labelled by the wall crossed between the two alcoves.
    pub fn build<Q: Exact>(rs: &RootSystem<Q>, cat: &IdealCatalog) -> Result<Self> {
        let ideals = cat.ideals();
        let points: Vec<WeightVector<Q>> = ideals.iter().map(|a| rho_point(rs, a)).collect();
        let mut edges = BTreeMap::new();
        for (a, b) in one_root_pairs(ideals) {
            let (lo, hi) = if ideals[a].dim() < ideals[b].dim() { (a, b) } else { (b, a) };
            let label = (0..=rs.rank())
                .find(|&i| rs.apply_affine(&cat.word(lo).push(i), rs.rho()) == points[hi])
                .ok_or_else(|| Error::InvariantViolation(format!("ideals {lo} and {hi} are not adjacent alcoves")))?;
            edges.insert((a, b), label);
        }
        Ok(Self { ty: rs.simple_type(), dims: ideals.iter().map(AbelianIdeal::dim).collect(), edges })
    }

    pub fn num_nodes(&self) -> usize {
        self.dims.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes()];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Number of 4-cycles.
    pub fn count_four_cycles(&self) -> usize {
        let adj = self.adjacency();
        let n = adj.len();
        let mut total = 0;
        for a in 0..n {
            for c in a + 1..n {
                let common = adj[a].iter().filter(|x| adj[c].contains(x)).count();
                total += common * common.saturating_sub(1) / 2;
            }
        }
        total / 2
    }

    /// Automorphism group of the unlabelled graph.
    pub fn automorphism_group(&self) -> GroupFingerprint {
        GroupFingerprint::of(&automorphisms(&self.adjacency()))
    }

    /// `graph hasse_<TYPE> { ... }`; type A nodes also carry their rim code.
    pub fn to_dot<Q: Exact>(&self, rs: &RootSystem<Q>, cat: &IdealCatalog) -> Result<String> {
        let mut s = String::new();
        writeln!(s, "graph hasse_{} {{", self.ty).unwrap();
        writeln!(s, "  node [shape=circle];").unwrap();
        for (k, dim) in self.dims.iter().enumerate() {
            if self.ty.family() == Family::A {
                let d = young_of_ideal(rs, &cat.ideals()[k])?;
                let rim = rim_string(&d, self.ty.rank() + 1)?;
                writeln!(s, "  {k} [dim={dim}, rim=\"{rim}\"];").unwrap();
            } else {
                writeln!(s, "  {k} [dim={dim}];").unwrap();
            }
        }
        for (&(a, b), label) in &self.edges {
            writeln!(s, "  {a} -- {b} [label=\"{label}\"];").unwrap();
        }
        s.push_str("}\n");
        Ok(s)
    }
}

impl<Q: Exact> RootSystem<Q> {
    /// Upper alcoves among the alcoves of the ideals.
    pub fn upper_alcoves(&self, cat: &IdealCatalog) -> Result<Vec<UpperAlcoveInfo>> {
        let l = self.rank();
        let theta = WeightVector::from(self.theta());
        let maximal: BTreeSet<_> = maximal_ideals(cat.ideals()).iter().map(AbelianIdeal::root_set).collect();
        let mut out = Vec::new();
        for k in 0..cat.len() {
            let verts = self.alcove_vertices(cat.word(k));
            let mut off = Vec::new();
            for (ty, v) in &verts {
                let t = self.inner(v, &theta)?;
                if t > Q::one() {
                    return Err(Error::InvariantViolation(format!("alcove of ideal {k} leaves 2A")));
                }
                if t < Q::one() {
                    off.push(*ty);
                }
            }
            if off.len() == 1 && verts.len() == l + 1 {
                out.push(UpperAlcoveInfo {
                    ideal: k,
                    lower_vertex_type: off[0],
                    is_maximal: maximal.contains(&cat.ideals()[k].root_set()),
                });
            }
        }
        Ok(out)
    }

    /// Squared volume of the facet of `A` opposite vertex `i`, up to a common factor.
    fn facet_gram_det(&self, i: usize) -> Q {
        let verts: Vec<WeightVector<Q>> = self
            .fundamental_alcove_vertices()
            .into_iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v)
            .collect();
        let base = &verts[0];
        let diffs: Vec<WeightVector<Q>> = verts[1..].iter().map(|v| v - base).collect();
        if diffs.is_empty() {
            return Q::one();
        }
        let m = Matrix::from_fn(diffs.len(), diffs.len(), |r, c| {
            self.inner(&diffs[r], &diffs[c]).expect("same rank")
        });
        m.det()
    }

    /// `vol^2(F_i) / vol^2(F_0)` for `i = 0..=l`, from Gram determinants.
    pub fn facet_volume_ratios(&self) -> Vec<Q> {
        let f0 = self.facet_gram_det(0);
        (0..=self.rank()).map(|i| self.facet_gram_det(i) / f0.clone()).collect()
    }

    /// `n_i^2 |alpha_i|^2 / |theta|^2`, with `n_0 = 1` and `alpha_0 = -theta`.
    pub fn expected_facet_ratios(&self) -> Vec<Q> {
        let l = self.rank();
        let th = self.root_norm_sq(self.theta());
        let mut out = vec![Q::one()];
        for i in 1..=l {
            let n = Q::from_int(self.marks()[i - 1]);
            out.push(n.clone() * n * self.root_norm_sq(&crate::root_system::Root::simple(l, i)) / th.clone());
        }
        out
    }
}
