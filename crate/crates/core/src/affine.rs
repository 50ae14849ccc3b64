//! The scaled affine Weyl group, affine roots, alcoves and minimal coset
//! representatives of `W_{perp phi}` in the affine parabolic `W^_{perp phi}`.
//!
//! `s_0` acts by `s_0(x) = x - (<x, theta^vee> - g) theta`, so that
//! `s_0 rho = rho + theta`. Affine root `phi + n delta` corresponds to the
//! affine function `x -> (x|phi) + n/2`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cartan::{self, ORBIT_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::IntPoly;
use crate::root_system::{Root, RootSystem, WeightVector};
use crate::scalar::Exact;
use crate::weyl::ParabolicDescriptor;

/// A word in `s_0, ..., s_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AffineWord(Vec<usize>);

impl AffineWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i > rank) {
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

    /// `self` followed by `other`.
    pub fn concat(&self, other: &AffineWord) -> AffineWord {
        AffineWord([self.0.as_slice(), other.0.as_slice()].concat())
    }

    pub fn push(&self, i: usize) -> AffineWord {
        let mut v = self.0.clone();
        v.push(i);
        AffineWord(v)
    }
}

impl fmt::Display for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Affine map `x -> M x + t` on simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    linear: Matrix<i64>,
    translation: Vec<i64>,
}

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        Self { linear: Matrix::identity(rank), translation: vec![0; rank] }
    }

    pub fn linear(&self) -> &Matrix<i64> {
        &self.linear
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AffineElement) -> AffineElement {
        let mut t = self.linear.mul_vec(&other.translation);
        for (a, b) in t.iter_mut().zip(&self.translation) {
            *a += b;
        }
        AffineElement { linear: &self.linear * &other.linear, translation: t }
    }

    pub fn apply<Q: Exact>(&self, x: &WeightVector<Q>) -> WeightVector<Q> {
        let lin = self.linear.map(|&c| Q::from_int(c)).mul_vec(x.coords());
        WeightVector::new(
            lin.into_iter()
                .zip(&self.translation)
                .map(|(a, &b)| a + Q::from_int(b))
                .collect(),
        )
    }

    /// Image of `x/2` doubled, for integer `x`; used with `x = 2 rho`.
    pub fn apply_doubled(&self, x2: &[i64]) -> Vec<i64> {
        self.linear
            .mul_vec(x2)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + 2 * b)
            .collect()
    }
}

/// The affine root `finite + level * delta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRoot {
    pub finite: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i64) -> Self {
        Self { finite, level }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }

    pub fn negate(&self) -> Self {
        Self { finite: -&self.finite, level: -self.level }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}d", self.finite, self.level)
    }
}

/// An alcove `w A`, represented by a word and its rho-point `w rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove<Q> {
    pub word: AffineWord,
    pub rho_point: WeightVector<Q>,
}

/// A minimal coset representative with its element and doubled rho-point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub word: AffineWord,
    pub element: AffineElement,
    pub rho_point2: Vec<i64>,
}

impl<Q: Exact> RootSystem<Q> {
    pub fn affine_word(&self, letters: &[usize]) -> Result<AffineWord> {
        AffineWord::new(letters.to_vec(), self.rank())
    }

    /// `s_i` as an affine map; `s_0 = (S_theta, g theta)`.
    pub fn affine_generator(&self, i: usize) -> AffineElement {
        let l = self.rank();
        if i == 0 {
            let th = self.theta().coords();
            let c = self.theta_coroot();
            let lin = Matrix::from_fn(l, l, |r, col| (r == col) as i64 - th[r] * c[col]);
            AffineElement { linear: lin, translation: th.iter().map(|x| x * self.g()).collect() }
        } else {
            AffineElement { linear: self.simple_reflection(i).matrix().clone(), translation: vec![0; l] }
        }
    }

    pub fn affine_element(&self, w: &AffineWord) -> AffineElement {
        w.letters()
            .iter()
            .fold(AffineElement::identity(self.rank()), |acc, &i| acc.compose(&self.affine_generator(i)))
    }

    /// Apply a word, rightmost letter first.
    pub fn apply_affine(&self, w: &AffineWord, x: &WeightVector<Q>) -> WeightVector<Q> {
        self.affine_element(w).apply(x)
    }

    pub fn alcove(&self, w: &AffineWord) -> Alcove<Q> {
        Alcove { word: w.clone(), rho_point: self.apply_affine(w, self.rho()) }
    }

    /// `s_i` on an affine root.
    pub fn reflect_affine_root(&self, i: usize, beta: &AffineRoot) -> Result<AffineRoot> {
        let l = self.rank();
        if i > l {
            return Err(Error::InvalidGenerator { index: i, max: l });
        }
        if beta.finite.rank() != l {
            return Err(Error::DimensionMismatch { expected: l, found: beta.finite.rank() });
        }
        Ok(self.reflect_affine_root_unchecked(i, beta))
    }

    fn reflect_affine_root_unchecked(&self, i: usize, beta: &AffineRoot) -> AffineRoot {
        let mut v = beta.finite.coords().to_vec();
        if i == 0 {
            let p = self.theta_pairing(&v);
            for (x, t) in v.iter_mut().zip(self.theta().coords()) {
                *x -= p * t;
            }
            AffineRoot { finite: Root::new(v), level: beta.level + p }
        } else {
            self.reflect_int(i - 1, &mut v);
            AffineRoot { finite: Root::new(v), level: beta.level }
        }
    }

    /// `alpha_i`, with `alpha_0 = delta - theta`.
    pub fn simple_affine_root(&self, i: usize) -> AffineRoot {
        let l = self.rank();
        if i == 0 {
            AffineRoot { finite: -self.theta(), level: 1 }
        } else {
            AffineRoot { finite: Root::simple(l, i), level: 0 }
        }
    }

    /// `w beta`, applying the rightmost letter first.
    pub fn apply_affine_to_root(&self, w: &AffineWord, beta: &AffineRoot) -> AffineRoot {
        w.letters()
            .iter()
            .rev()
            .fold(beta.clone(), |b, &i| self.reflect_affine_root_unchecked(i, &b))
    }

    /// `w^{-1} beta`.
    pub fn apply_affine_inverse_to_root(&self, w: &AffineWord, beta: &AffineRoot) -> AffineRoot {
        w.letters()
            .iter()
            .fold(beta.clone(), |b, &i| self.reflect_affine_root_unchecked(i, &b))
    }

    /// `{alpha_{i1}, s_{i1} alpha_{i2}, ...}`; fails unless the word is reduced.
    pub fn affine_inversion_set(&self, w: &AffineWord) -> Result<Vec<AffineRoot>> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(w.len());
        for k in 0..w.len() {
            let prefix = AffineWord(w.letters()[..k].to_vec());
            let r = self.apply_affine_to_root(&prefix, &self.simple_affine_root(w.letters()[k]));
            if !r.is_positive() || !seen.insert(r.clone()) {
                return Err(Error::NonReducedWord { position: k + 1, root: r.to_string() });
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Length of a reduced affine word, checked through its inversion set.
    pub fn affine_length(&self, w: &AffineWord) -> Result<usize> {
        Ok(self.affine_inversion_set(w)?.len())
    }

    /// `(x|alpha_i) >= 0` for all `i` and `(x|theta) <= 1`.
    pub fn in_2a(&self, x: &WeightVector<Q>) -> Result<bool> {
        let l = self.rank();
        for i in 1..=l {
            let a = WeightVector::from(&Root::simple(l, i));
            if self.inner(x, &a)? < Q::zero() {
                return Ok(false);
            }
        }
        let t = WeightVector::from(self.theta());
        Ok(self.inner(x, &t)? <= Q::one())
    }

    /// Vertices `0, coweight_i / n_i` of the fundamental alcove, indexed by type `0..=l`.
    pub fn fundamental_alcove_vertices(&self) -> Vec<WeightVector<Q>> {
        let l = self.rank();
        let mut out = vec![WeightVector::zero(l)];
        for i in 0..l {
            let n = Q::from_int(self.marks()[i]);
            out.push(self.coweights()[i].scale(&(Q::one() / n)));
        }
        out
    }

    /// Vertices of `w A`, tagged with their type.
    pub fn alcove_vertices(&self, w: &AffineWord) -> Vec<(usize, WeightVector<Q>)> {
        let e = self.affine_element(w);
        self.fundamental_alcove_vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| (i, e.apply(v)))
            .collect()
    }

    /// Generators of `W^_{perp phi}`: finite nodes perpendicular to `phi`,
    /// plus 0 when `theta` is perpendicular to `phi`.
    pub fn perp_generators(&self, phi: &Root) -> ParabolicDescriptor {
        let mut nodes: Vec<usize> = self.perp_nodes(phi).nodes().iter().copied().collect();
        if self.form_int(self.theta().coords(), phi.coords()) == 0 {
            nodes.push(0);
        }
        ParabolicDescriptor::new(nodes, 0, self.rank()).expect("nodes are in range")
    }

    fn affine_sub_cartan(&self, nodes: &ParabolicDescriptor) -> Matrix<i64> {
        let idx: Vec<usize> = nodes.nodes().iter().copied().collect();
        assert!(idx.len() <= self.rank(), "affine parabolic must be a proper subset of nodes");
        cartan::sub_cartan(&self.extended_cartan(), &idx)
    }

    /// Length generating function of the finite parabolic subgroup of the
    /// affine Weyl group generated by `nodes` (a proper subset of `0..=l`).
    pub fn affine_parabolic_poincare(&self, nodes: &ParabolicDescriptor) -> IntPoly {
        cartan::subsystem_poincare(&self.affine_sub_cartan(nodes), ORBIT_LIMIT)
    }

    pub fn affine_longest_element_length(&self, nodes: &ParabolicDescriptor) -> usize {
        cartan::positive_roots(&self.affine_sub_cartan(nodes)).len()
    }

    /// Minimal representatives of `W_{perp phi} \ W^_{perp phi}` with their
    /// elements and doubled rho-points, sorted by length and then word.
    pub fn coset_reps(&self, phi: &Root) -> Result<Vec<CosetRep>> {
        self.check_positive_long(phi)?;
        Ok(self.coset_reps_unchecked(phi))
    }

    /// As [`RootSystem::coset_reps`] for any positive root, short ones included.
    pub fn coset_reps_any(&self, phi: &Root) -> Result<Vec<CosetRep>> {
        self.check_positive(phi)?;
        Ok(self.coset_reps_unchecked(phi))
    }

    fn coset_reps_unchecked(&self, phi: &Root) -> Vec<CosetRep> {
        let gens = self.perp_generators(phi);
        let identity = CosetRep {
            word: AffineWord::empty(),
            element: AffineElement::identity(self.rank()),
            rho_point2: self.two_rho().to_vec(),
        };
        if !gens.contains(0) {
            return vec![identity];
        }
        let finite: Vec<usize> = gens.nodes().iter().copied().filter(|&j| j != 0).collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(identity.rho_point2.clone());
        let mut out = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(rep) = queue.pop_front() {
            for &j in gens.nodes() {
                // length goes up iff w(alpha_j) > 0
                if !self.apply_affine_to_root(&rep.word, &self.simple_affine_root(j)).is_positive() {
                    continue;
                }
                let word = rep.word.push(j);
                let left_minimal = finite.iter().all(|&f| {
                    self.apply_affine_inverse_to_root(&word, &self.simple_affine_root(f)).is_positive()
                });
                if !left_minimal {
                    continue;
                }
                let element = rep.element.compose(&self.affine_generator(j));
                let rho_point2 = element.apply_doubled(self.two_rho());
                if seen.insert(rho_point2.clone()) {
                    let next = CosetRep { word, element, rho_point2 };
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
        out
    }

    pub fn minimal_coset_reps(&self, phi: &Root) -> Result<Vec<AffineWord>> {
        Ok(self.coset_reps(phi)?.into_iter().map(|r| r.word).collect())
    }

    /// `P_phi(t)`, the length generating function of the minimal coset representatives.
    pub fn poincare_p(&self, phi: &Root) -> Result<IntPoly> {
        Ok(Self::length_polynomial(&self.coset_reps(phi)?))
    }

    /// `P_phi(t)` for any positive root; the same quotient makes sense for short roots.
    pub fn poincare_p_any(&self, phi: &Root) -> Result<IntPoly> {
        Ok(Self::length_polynomial(&self.coset_reps_any(phi)?))
    }

    fn length_polynomial(reps: &[CosetRep]) -> IntPoly {
        let mut coeffs: Vec<i64> = Vec::new();
        for rep in reps {
            let k = rep.word.len();
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += 1;
        }
        IntPoly::new(coeffs)
    }

    /// `W^_{perp phi}(t) / W_{perp phi}(t)` from the two parabolic Poincare
    /// polynomials; an independent route to `P_phi(t)`.
    pub fn poincare_p_quotient(&self, phi: &Root) -> Result<IntPoly> {
        self.check_positive(phi)?;
        let gens = self.perp_generators(phi);
        let num = self.affine_parabolic_poincare(&gens);
        let den = self.affine_parabolic_poincare(&gens.without(0));
        num.div_exact(&den)
            .ok_or_else(|| Error::InvariantViolation("parabolic quotient is not a polynomial".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Rs = RootSystem<Rational64>;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn s0_moves_rho_by_theta() {
        let rs = Rs::of("E6").unwrap();
        let w = rs.affine_word(&[0]).unwrap();
        let expect = rs.rho() + &WeightVector::from(rs.theta());
        assert_eq!(rs.apply_affine(&w, rs.rho()), expect);
        assert_eq!(&rs.apply_affine(&AffineWord::empty(), rs.rho()), rs.rho());
    }

    #[test]
    fn g2_gallery_difference() {
        let rs = Rs::of("G2").unwrap();
        let a = rs.apply_affine(&rs.affine_word(&[0, 2, 1]).unwrap(), rs.rho());
        let b = rs.apply_affine(&rs.affine_word(&[0, 2]).unwrap(), rs.rho());
        assert_eq!(&a - &b, WeightVector::from_ints(&[2, 1]));
    }

    #[test]
    fn affine_root_reflections() {
        let rs = Rs::of("C3").unwrap();
        let a0 = rs.simple_affine_root(0);
        assert_eq!(rs.reflect_affine_root(0, &a0).unwrap(), a0.negate());
        let th = AffineRoot::new(rs.theta().clone(), 0);
        assert_eq!(rs.reflect_affine_root(0, &th).unwrap(), AffineRoot::new(-rs.theta(), 2));
        let phi = AffineRoot::new(Root::new(vec![1, 1, 0]), 1);
        let img = rs.reflect_affine_root(3, &phi).unwrap();
        assert_eq!(img.level, 1);
        assert!(img.is_positive());
        for i in 0..=3 {
            for r in rs.positive_roots() {
                let b = AffineRoot::new(r.clone(), 2);
                let back = rs.reflect_affine_root(i, &rs.reflect_affine_root(i, &b).unwrap()).unwrap();
                assert_eq!(back, b);
            }
        }
    }

    #[test]
    fn affine_inversion_sets() {
        let rs = Rs::of("A3").unwrap();
        assert!(rs.affine_inversion_set(&AffineWord::empty()).unwrap().is_empty());
        let inv = rs.affine_inversion_set(&rs.affine_word(&[0]).unwrap()).unwrap();
        assert_eq!(inv, vec![rs.simple_affine_root(0)]);
        assert!(rs.affine_inversion_set(&rs.affine_word(&[0, 0]).unwrap()).is_err());
    }

    #[test]
    fn two_a_membership() {
        let rs = Rs::of("A1").unwrap();
        assert!(rs.in_2a(rs.rho()).unwrap());
        let rt = rs.rho() + &WeightVector::from(rs.theta());
        assert!(rs.in_2a(&rt).unwrap());
        assert!(!rs.in_2a(&rt.scale(&q(2, 1))).unwrap());
    }

    #[test]
    fn alcove_vertices_basic() {
        let rs = Rs::of("B3").unwrap();
        let v = rs.alcove_vertices(&AffineWord::empty());
        assert_eq!(v[0].1, WeightVector::zero(3));
        assert_eq!(v.iter().map(|x| x.1.clone()).collect::<Vec<_>>(), rs.fundamental_alcove_vertices());
        let s0 = rs.alcove_vertices(&rs.affine_word(&[0]).unwrap());
        let gt = WeightVector::from(&rs.theta().scaled(rs.g()));
        assert_eq!(s0[0].1, gt);
    }

    #[test]
    fn perp_generators_examples() {
        let rs = Rs::of("A4").unwrap();
        let t = rs.perp_generators(rs.theta());
        assert!(!t.contains(0));
        assert_eq!(t.nodes().iter().copied().collect::<Vec<_>>(), vec![2, 3]);
        let p = rs.perp_generators(&Root::simple(4, 2));
        assert!(p.contains(0) && p.contains(4));
    }

    #[test]
    fn a5_alpha3_representatives() {
        let rs = Rs::of("A5").unwrap();
        let reps = rs.minimal_coset_reps(&Root::simple(5, 3)).unwrap();
        let words: Vec<Vec<usize>> = reps.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(
            words,
            vec![vec![], vec![0], vec![0, 1], vec![0, 5], vec![0, 1, 5], vec![0, 1, 5, 0]]
        );
        let p = rs.poincare_p(&Root::simple(5, 3)).unwrap();
        let expect = (&IntPoly::q_int(3) * &IntPoly::q_int(4)).div_exact(&IntPoly::q_int(2)).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.at_one(), 6);
        assert_eq!(rs.poincare_p_quotient(&Root::simple(5, 3)).unwrap(), expect);
    }

    #[test]
    fn trivial_quotients() {
        let rs = Rs::of("C5").unwrap();
        assert_eq!(rs.minimal_coset_reps(&Root::simple(5, 1)).unwrap_err(), Error::NotLong(vec![1, 0, 0, 0, 0]));
        assert_eq!(rs.poincare_p_any(&Root::simple(5, 1)).unwrap(), IntPoly::one());
        assert_eq!(rs.poincare_p(rs.theta()).unwrap(), IntPoly::one());
        let rs = Rs::of("B4").unwrap();
        assert_eq!(rs.poincare_p(&Root::simple(4, 1)).unwrap(), IntPoly::q_int(2));
    }
}
