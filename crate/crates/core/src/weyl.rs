//! Finite Weyl group elements as integer matrices on simple-root coordinates.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::cartan::{self, ORBIT_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::IntPoly;
use crate::root_system::{Root, RootSystem, WeightVector};
use crate::scalar::Exact;

/// A word `s_{i1} ... s_{ik}` in the simple reflections, letters 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::InvalidGenerator { index: bad, max: rank });
        }
        Ok(Self(letters))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A Weyl group element, identified by its matrix `M` acting as `x -> M x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    matrix: Matrix<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self { matrix: Matrix::identity(rank) }
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement { matrix: &self.matrix * &other.matrix }
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.matrix.mul_vec(x)
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root::new(self.apply_int(r.coords()))
    }

    pub fn apply<Q: Exact>(&self, x: &WeightVector<Q>) -> WeightVector<Q> {
        self.matrix.map(|&c| Q::from_int(c)).mul_vec(x.coords()).into()
    }
}

impl<Q: Exact> From<Vec<Q>> for WeightVector<Q> {
    fn from(v: Vec<Q>) -> Self {
        WeightVector::new(v)
    }
}

/// Which candidate the greedy search in [`RootSystem::minimal_word_to_theta_with`] picks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Smallest,
    Largest,
}

/// A set of Dynkin nodes generating a standard parabolic subgroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ParabolicDescriptor {
    nodes: BTreeSet<usize>,
}

impl ParabolicDescriptor {
    /// Nodes must lie in `min_node..=max_node` (1 for finite, 0 for affine).
    pub fn new(nodes: impl IntoIterator<Item = usize>, min_node: usize, max_node: usize) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if let Some(&bad) = nodes.iter().find(|&&i| i < min_node || i > max_node) {
            return Err(Error::InvalidGenerator { index: bad, max: max_node });
        }
        Ok(Self { nodes })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    pub fn contains(&self, i: usize) -> bool {
        self.nodes.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn without(&self, i: usize) -> Self {
        let mut nodes = self.nodes.clone();
        nodes.remove(&i);
        Self { nodes }
    }
}

impl<Q: Exact> RootSystem<Q> {
    /// Validate a word.
    pub fn word(&self, letters: &[usize]) -> Result<WeylWord> {
        WeylWord::new(letters.to_vec(), self.rank())
    }

    /// Matrix of `s_i` (1-based): `s_i x = x - <x, alpha_i^vee> alpha_i`.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let l = self.rank();
        let mut m = Matrix::identity(l);
        for c in 0..l {
            m[(i - 1, c)] -= self.cartan()[(c, i - 1)];
        }
        WeylElement { matrix: m }
    }

    pub fn element(&self, w: &WeylWord) -> WeylElement {
        w.letters()
            .iter()
            .fold(WeylElement::identity(self.rank()), |acc, &i| acc.compose(&self.simple_reflection(i)))
    }

    /// Apply a word, rightmost letter first.
    pub fn apply(&self, w: &WeylWord, x: &WeightVector<Q>) -> WeightVector<Q> {
        self.element(w).apply(x)
    }

    /// Apply a word to an integer vector.
    pub fn apply_word_int(&self, w: &WeylWord, x: &[i64]) -> Vec<i64> {
        let mut v = x.to_vec();
        for &i in w.letters().iter().rev() {
            self.reflect_int(i - 1, &mut v);
        }
        v
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|r| w.apply_root(r).is_negative())
            .count()
    }

    /// `Phi_w = {alpha_{i1}, s_{i1} alpha_{i2}, ...}` in order of the letters.
    /// Fails on a non-reduced word.
    pub fn inversion_set(&self, w: &WeylWord) -> Result<Vec<Root>> {
        let l = self.rank();
        let mut prefix = WeylElement::identity(l);
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(w.len());
        for (k, &i) in w.letters().iter().enumerate() {
            let r = prefix.apply_root(&Root::simple(l, i));
            if !r.is_positive() || !seen.insert(r.clone()) {
                return Err(Error::NonReducedWord { position: k + 1, root: r.to_string() });
            }
            out.push(r);
            prefix = prefix.compose(&self.simple_reflection(i));
        }
        Ok(out)
    }

    /// The shortest `w` with `w phi = theta`, as a word with `apply(w, phi) = theta`.
    pub fn minimal_word_to_theta(&self, phi: &Root) -> Result<WeylWord> {
        self.minimal_word_to_theta_with(phi, TieBreak::Smallest)
    }

    /// Greedy construction: repeatedly reflect in a simple root with
    /// `<alpha_i, phi^vee> = -1`, which lowers `L` by one.
    pub fn minimal_word_to_theta_with(&self, phi: &Root, tie: TieBreak) -> Result<WeylWord> {
        self.check_positive_long(phi)?;
        let l = self.rank();
        let mut cur = phi.coords().to_vec();
        let mut steps = Vec::new();
        while cur != self.theta().coords() {
            let cur_root = Root::new(cur.clone());
            let mut candidates = (1..=l).filter(|&i| {
                let a = Root::simple(l, i);
                self.coroot_pairing_int(a.coords(), &cur_root) == -1
            });
            let pick = match tie {
                TieBreak::Smallest => candidates.next(),
                TieBreak::Largest => candidates.last(),
            };
            let i = pick.ok_or_else(|| {
                Error::InvariantViolation(format!("no descent step from {cur_root} towards theta"))
            })?;
            self.reflect_int(i - 1, &mut cur);
            steps.push(i);
        }
        steps.reverse();
        Ok(WeylWord(steps))
    }

    /// Finite nodes `i` with `(alpha_i|phi) = 0`.
    pub fn perp_nodes(&self, phi: &Root) -> ParabolicDescriptor {
        let l = self.rank();
        let nodes = (1..=l).filter(|&i| self.form_int(Root::simple(l, i).coords(), phi.coords()) == 0);
        ParabolicDescriptor { nodes: nodes.collect() }
    }

    fn finite_sub_cartan(&self, nodes: &ParabolicDescriptor) -> Matrix<i64> {
        let idx: Vec<usize> = nodes.nodes().iter().map(|&i| i - 1).collect();
        cartan::sub_cartan(self.cartan(), &idx)
    }

    /// Length generating function of the standard parabolic subgroup `W_J`.
    pub fn parabolic_poincare(&self, nodes: &ParabolicDescriptor) -> IntPoly {
        self.parabolic_poincare_with_limit(nodes, ORBIT_LIMIT)
    }

    /// As [`RootSystem::parabolic_poincare`] with an explicit orbit-search limit.
    pub fn parabolic_poincare_with_limit(&self, nodes: &ParabolicDescriptor, limit: u64) -> IntPoly {
        cartan::subsystem_poincare(&self.finite_sub_cartan(nodes), limit)
    }

    /// `W(t) = prod [m_i + 1]`.
    pub fn poincare(&self) -> IntPoly {
        cartan::poincare_from_exponents(self.exponents())
    }

    /// Length of the longest element of `W_J`, the number of positive roots of its subsystem.
    pub fn longest_element_length(&self, nodes: &ParabolicDescriptor) -> usize {
        cartan::positive_roots(&self.finite_sub_cartan(nodes)).len()
    }
}
