//! Abelian ideals of the Borel subalgebra, represented by their root sets.
//!
//! [`enumerate_all`] is a direct search over up-closed abelian root sets and
//! does not use the parametrization; [`IdealCatalog`] matches the
//! parametrization by `(phi, w^)` against it.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::affine::AffineWord;
use crate::cartan::SimpleType;
use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, WeightVector};
use crate::scalar::Exact;

/// Bit `k` stands for `positive_roots()[k]`; E8 has 120 positive roots.
pub type RootSet = u128;

/// Pairwise root-sum data over the positive roots.
#[derive(Clone, Debug)]
pub struct RootTables {
    /// `partners[a]`: roots `b` with `a + b` a root.
    partners: Vec<RootSet>,
    /// `above[a]`: roots `c` with `c - a` a positive root.
    above: Vec<RootSet>,
}

impl RootTables {
    pub fn new<Q: Exact>(rs: &RootSystem<Q>) -> Self {
        let roots = rs.positive_roots();
        assert!(roots.len() <= 128, "root sets are limited to 128 positive roots");
        let n = roots.len();
        let mut partners = vec![0u128; n];
        let mut above = vec![0u128; n];
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = rs.root_index(&(&roots[a] + &roots[b])) {
                    partners[a] |= 1 << b;
                    above[a] |= 1 << c;
                }
            }
        }
        Self { partners, above }
    }

    /// Closed under adding positive roots.
    pub fn is_ideal(&self, set: RootSet) -> bool {
        bits(set).all(|a| self.above[a] & !set == 0)
    }

    /// No two members sum to a root.
    pub fn is_abelian(&self, set: RootSet) -> bool {
        bits(set).all(|a| self.partners[a] & set == 0)
    }

    pub fn is_abelian_ideal(&self, set: RootSet) -> bool {
        self.is_ideal(set) && self.is_abelian(set)
    }
}

/// Iterate over the set bits of a root set.
pub fn bits(set: RootSet) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&k| set >> k & 1 == 1)
}

/// An abelian ideal, given by its set of positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianIdeal {
    roots: Vec<Root>,
    root_sum: Vec<i64>,
    set: RootSet,
}

impl AbelianIdeal {
    fn from_set<Q: Exact>(rs: &RootSystem<Q>, set: RootSet) -> Self {
        let all = rs.positive_roots();
        let mut roots: Vec<Root> = bits(set).map(|k| all[k].clone()).collect();
        roots.sort();
        let mut root_sum = vec![0; rs.rank()];
        for r in &roots {
            for (s, c) in root_sum.iter_mut().zip(r.coords()) {
                *s += c;
            }
        }
        Self { roots, root_sum, set }
    }

    /// Roots sorted lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// `<Psi>`, the sum of the roots.
    pub fn root_sum(&self) -> &[i64] {
        &self.root_sum
    }

    pub fn root_sum_weight<Q: Exact>(&self) -> WeightVector<Q> {
        WeightVector::from_ints(&self.root_sum)
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn root_set(&self) -> RootSet {
        self.set
    }

    pub fn is_zero(&self) -> bool {
        self.set == 0
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    pub fn is_subset_of(&self, other: &AbelianIdeal) -> bool {
        self.set & !other.set == 0
    }
}

/// Deterministic order: by dimension, then lexicographically by root sum.
pub fn canonical_order(a: &AbelianIdeal, b: &AbelianIdeal) -> std::cmp::Ordering {
    a.dim().cmp(&b.dim()).then_with(|| a.root_sum.cmp(&b.root_sum))
}

/// Parameter `(phi, w^)` of a nonzero abelian ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IdealParam {
    pub phi: Root,
    pub coset_word: AffineWord,
}

/// Every abelian ideal, by depth-first search over up-closed abelian root sets.
/// A root may be added when it is maximal among the roots not yet included and
/// keeps the set abelian. Sorted by [`canonical_order`].
pub fn enumerate_all<Q: Exact>(rs: &RootSystem<Q>) -> Vec<AbelianIdeal> {
    let t = RootTables::new(rs);
    let n = rs.num_positive_roots();
    let mut seen: HashSet<RootSet> = HashSet::from([0]);
    let mut stack = vec![0u128];
    while let Some(set) = stack.pop() {
        for b in 0..n {
            let bit = 1u128 << b;
            if set & bit != 0 || t.above[b] & !set != 0 || t.partners[b] & (set | bit) != 0 {
                continue;
            }
            let next = set | bit;
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<AbelianIdeal> = seen.into_iter().map(|s| AbelianIdeal::from_set(rs, s)).collect();
    out.sort_by(canonical_order);
    out
}

/// Maximal elements under inclusion.
pub fn maximal_ideals(ideals: &[AbelianIdeal]) -> Vec<AbelianIdeal> {
    ideals
        .iter()
        .filter(|a| !ideals.iter().any(|b| b.set != a.set && a.is_subset_of(b)))
        .cloned()
        .collect()
}

/// The maximal dimension from the formula `g - 1 + N^ - N` at one long simple root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxDimTerm {
    /// Node of the long simple root.
    pub node: usize,
    pub g_minus_1: i64,
    /// Positive roots of `W^_{perp alpha}`.
    pub n_hat: usize,
    /// Positive roots of `W_{perp alpha}`.
    pub n: usize,
    /// `n_hat` and `n` after discarding components common to both diagrams.
    pub n_hat_reduced: usize,
    pub n_reduced: usize,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxDimension {
    pub value: i64,
    /// Terms attaining the maximum.
    pub witnesses: Vec<MaxDimTerm>,
    /// One term per long simple root.
    pub terms: Vec<MaxDimTerm>,
}

/// Per-type data behind the two sum formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumFormulaReport {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    /// `(phi, P_phi(1))` over positive long roots.
    pub per_root: Vec<(Root, i64)>,
    /// `sum P_phi(1)`, expected `2^l - 1`.
    pub first_sum: i64,
    pub first_expected: i64,
    /// `P_{alpha_i}(1)` for every node.
    pub simple_values: Vec<i64>,
    /// `r_i = #{phi : pr(phi) = alpha_i}`; absent in type A where the affine diagram is a cycle.
    pub r: Option<Vec<usize>>,
    /// `sum r_i P_{alpha_i}(1)`.
    pub breakdown_sum: Option<i64>,
    /// `P_phi(t) = P_{pr(phi)}(t)` for every long `phi`.
    pub pr_consistent: Option<bool>,
    /// `sum n_i P_{alpha_i}(1)` over long simple roots, expected `2^(l-1)`.
    pub second_sum: i64,
    pub second_expected: i64,
}

impl SumFormulaReport {
    pub fn holds(&self) -> bool {
        self.first_sum == self.first_expected
            && self.second_sum == self.second_expected
            && self.breakdown_sum.is_none_or(|b| b == self.first_sum)
            && self.pr_consistent.unwrap_or(true)
    }
}

/// JSON form of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub roots: Vec<Vec<i64>>,
    pub dim: usize,
    pub assoc_long_root: Option<Vec<i64>>,
    pub param: Option<ParamJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamJson {
    pub phi: Vec<i64>,
    pub coset_word: Vec<usize>,
}

impl<Q: Exact> RootSystem<Q> {
    pub fn root_tables(&self) -> RootTables {
        RootTables::new(self)
    }

    fn root_set_of(&self, roots: &[Root]) -> Result<RootSet> {
        let mut set = 0u128;
        for r in roots {
            if r.rank() != self.rank() {
                return Err(Error::DimensionMismatch { expected: self.rank(), found: r.rank() });
            }
            match self.root_index(r) {
                Some(k) => set |= 1 << k,
                None if self.is_root(r) => return Err(Error::NotPositive(r.coords().to_vec())),
                None => return Err(Error::NotARoot(r.coords().to_vec())),
            }
        }
        Ok(set)
    }

    /// Build an ideal from its roots, checking closure and commutativity.
    pub fn abelian_ideal(&self, roots: &[Root]) -> Result<AbelianIdeal> {
        let set = self.root_set_of(roots)?;
        let t = self.root_tables();
        if !t.is_abelian_ideal(set) {
            return Err(Error::InvariantViolation(format!(
                "{} is not an abelian ideal",
                roots.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            )));
        }
        Ok(AbelianIdeal::from_set(self, set))
    }

    pub fn zero_ideal(&self) -> AbelianIdeal {
        AbelianIdeal::from_set(self, 0)
    }

    /// `|rho + <Psi>|^2 - |rho|^2` for a set of positive roots.
    pub fn kostant_value(&self, psi: &[Root]) -> Result<Q> {
        let set = self.root_set_of(psi)?;
        let all = self.positive_roots();
        let mut sum = vec![0i64; self.rank()];
        for k in bits(set) {
            for (s, c) in sum.iter_mut().zip(all[k].coords()) {
                *s += c;
            }
        }
        let shifted = self.rho() + &WeightVector::from_ints(&sum);
        Ok(self.norm_sq(&shifted)? - self.norm_sq(self.rho())?)
    }

    /// [`Self::kostant_value`] for a root set, through the integer form.
    pub fn kostant_value_set(&self, set: RootSet) -> Q {
        let all = self.positive_roots();
        let mut sum = vec![0i64; self.rank()];
        for k in bits(set) {
            for (s, c) in sum.iter_mut().zip(all[k].coords()) {
                *s += c;
            }
        }
        let shifted: Vec<i64> = self.two_rho().iter().zip(&sum).map(|(a, b)| a + b).collect();
        self.inner_int(&shifted, &sum)
    }

    /// `a^{phi,min}` for every positive long root, keyed by root set.
    pub fn a_min_table(&self) -> Result<HashMap<RootSet, Root>> {
        let mut out = HashMap::new();
        for phi in self.long_positive_roots() {
            let set = self.a_min(&phi)?.root_set();
            if out.insert(set, phi).is_some() {
                return Err(Error::InvariantViolation("two long roots share a^{phi,min}".into()));
            }
        }
        Ok(out)
    }

    /// `a^{phi,min} = g_theta + sum of g_{theta - psi}` over `psi` in `Phi_w`.
    pub fn a_min(&self, phi: &Root) -> Result<AbelianIdeal> {
        let w = self.minimal_word_to_theta(phi)?;
        let inv = self.inversion_set(&w)?;
        let mut roots = vec![self.theta().clone()];
        for psi in &inv {
            let r = self.theta() - psi;
            if !self.is_positive_root(&r) {
                return Err(Error::InvariantViolation(format!("theta - {psi} is not a positive root")));
            }
            roots.push(r);
        }
        let ideal = self.abelian_ideal(&roots)?;
        let u = AffineWord::new([&[0][..], w.letters()].concat(), self.rank())?;
        let point = self.apply_affine(&u, self.rho());
        if point != self.rho() + &ideal.root_sum_weight() {
            return Err(Error::InvariantViolation("rho-point of a^{phi,min} is not s_0 w rho".into()));
        }
        Ok(ideal)
    }

    /// `a^{phi,min+} = a^{phi,min} + g_{w theta}` for `phi` perpendicular to `theta`.
    pub fn a_min_plus(&self, phi: &Root) -> Result<AbelianIdeal> {
        self.check_positive_long(phi)?;
        if self.form_int(phi.coords(), self.theta().coords()) != 0 {
            return Err(Error::NotPerpendicularToTheta(phi.coords().to_vec()));
        }
        let base = self.a_min(phi)?;
        let w = self.minimal_word_to_theta(phi)?;
        let extra = self.element(&w).apply_root(self.theta());
        let mut roots = base.roots().to_vec();
        roots.push(extra);
        self.abelian_ideal(&roots)
    }

    /// The ideal with parameter `(phi, w^)`: `Psi = {phi : delta - phi in Phi^_u}`
    /// for `u = s_0 w w^`.
    pub fn from_param(&self, param: &IdealParam) -> Result<AbelianIdeal> {
        let phi = &param.phi;
        self.check_positive_long(phi)?;
        let gens = self.perp_generators(phi);
        let hat = &param.coset_word;
        if let Some(&bad) = hat.letters().iter().find(|&&j| !gens.contains(j)) {
            return Err(Error::InvalidParameter(format!("s{bad} is not in the perpendicular subgroup of {phi}")));
        }
        if self.affine_inversion_set(hat).is_err() {
            return Err(Error::InvalidParameter(format!("{hat} is not reduced")));
        }
        for &f in gens.nodes().iter().filter(|&&f| f != 0) {
            if !self.apply_affine_inverse_to_root(hat, &self.simple_affine_root(f)).is_positive() {
                return Err(Error::InvalidParameter(format!("{hat} is not a minimal coset representative")));
            }
        }
        let w = self.minimal_word_to_theta(phi)?;
        let u = AffineWord::new([&[0][..], w.letters(), hat.letters()].concat(), self.rank())?;
        let inv = self
            .affine_inversion_set(&u)
            .map_err(|e| Error::InvariantViolation(format!("s_0 w w^ is not reduced: {e}")))?;
        let mut roots = Vec::with_capacity(inv.len());
        for b in &inv {
            if b.level != 1 {
                return Err(Error::InvariantViolation(format!("inversion {b} is not of level one")));
            }
            roots.push(-&b.finite);
        }
        let set = self.root_set_of(&roots).map_err(|e| Error::InvariantViolation(e.to_string()))?;
        if !self.root_tables().is_abelian_ideal(set) {
            return Err(Error::InvariantViolation(format!("parameter {phi}, {hat} gives no abelian ideal")));
        }
        let ideal = AbelianIdeal::from_set(self, set);
        let point = self.apply_affine(&u, self.rho());
        if point != self.rho() + &ideal.root_sum_weight() {
            return Err(Error::InvariantViolation("rho-point differs from rho + <Psi>".into()));
        }
        if !self.in_2a(&point)? {
            return Err(Error::InvariantViolation("rho-point lies outside 2A".into()));
        }
        Ok(ideal)
    }

    /// `a^{phi,max}`: the ideal of the longest minimal coset representative.
    pub fn a_max(&self, phi: &Root) -> Result<AbelianIdeal> {
        let reps = self.coset_reps(phi)?;
        let longest = reps.last().expect("identity is a representative");
        if reps.iter().filter(|r| r.word.len() == longest.word.len()).count() != 1 {
            return Err(Error::InvariantViolation(format!("no unique longest representative for {phi}")));
        }
        self.from_param(&IdealParam { phi: phi.clone(), coset_word: longest.word.clone() })
    }

    /// The alcove word `s_0 w w^` of a parameter.
    pub fn param_word(&self, param: &IdealParam) -> Result<AffineWord> {
        let w = self.minimal_word_to_theta(&param.phi)?;
        AffineWord::new([&[0][..], w.letters(), param.coset_word.letters()].concat(), self.rank())
    }

    /// Roots `phi` of the ideal with `(phi|theta) > 0`.
    pub fn not_perp_theta(&self, a: &AbelianIdeal) -> AbelianIdeal {
        let all = self.positive_roots();
        let set = bits(a.set)
            .filter(|&k| self.form_int(all[k].coords(), self.theta().coords()) > 0)
            .fold(0u128, |s, k| s | 1 << k);
        AbelianIdeal::from_set(self, set)
    }

    /// The unique long `phi` with `not_perp_theta(a) = a^{phi,min}`.
    pub fn associated_long_root(&self, a: &AbelianIdeal) -> Result<Root> {
        self.associated_long_root_with(&self.a_min_table()?, a)
    }

    /// [`Self::associated_long_root`] against a precomputed [`Self::a_min_table`].
    pub fn associated_long_root_with(&self, table: &HashMap<RootSet, Root>, a: &AbelianIdeal) -> Result<Root> {
        if a.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        table
            .get(&self.not_perp_theta(a).root_set())
            .cloned()
            .ok_or_else(|| Error::InvariantViolation("no long root matches the ideal".into()))
    }

    /// One term `g - 1 + N^ - N` of the maximal dimension formula.
    pub fn max_dim_term(&self, node: usize) -> MaxDimTerm {
        let alpha = Root::simple(self.rank(), node);
        let hat = self.perp_generators(&alpha);
        let fin = hat.without(0);
        let n_hat = self.affine_longest_element_length(&hat);
        let n = self.affine_longest_element_length(&fin);
        // components touching node 0 are the only ones that differ
        let (n_hat_reduced, n_reduced) = if hat.contains(0) {
            let ext = self.extended_cartan();
            let mut comp = BTreeSet::from([0usize]);
            let mut queue = VecDeque::from([0usize]);
            while let Some(i) = queue.pop_front() {
                for &j in hat.nodes() {
                    if ext[(i, j)] != 0 && comp.insert(j) {
                        queue.push_back(j);
                    }
                }
            }
            let with0 = crate::weyl::ParabolicDescriptor::new(comp.iter().copied(), 0, self.rank())
                .expect("nodes in range");
            let without0 = with0.without(0);
            (self.affine_longest_element_length(&with0), self.affine_longest_element_length(&without0))
        } else {
            (0, 0)
        };
        let g_minus_1 = self.g() - 1;
        MaxDimTerm {
            node,
            g_minus_1,
            n_hat,
            n,
            n_hat_reduced,
            n_reduced,
            value: g_minus_1 + n_hat as i64 - n as i64,
        }
    }

    /// Maximal dimension of an abelian ideal from the formula over long simple roots.
    pub fn max_dimension(&self) -> MaxDimension {
        let terms: Vec<MaxDimTerm> = self.long_simple_nodes().into_iter().map(|i| self.max_dim_term(i)).collect();
        let value = terms.iter().map(|t| t.value).max().expect("some simple root is long");
        let witnesses = terms.iter().filter(|t| t.value == value).cloned().collect();
        MaxDimension { value, witnesses, terms }
    }

    /// Whether a nonzero nonnegative vector is a sum of positive roots, by
    /// memoized search over remainders.
    pub fn is_sum_of_positive_roots(&self, v: &[i64]) -> bool {
        if v.iter().any(|&c| c < 0) || v.iter().all(|&c| c == 0) {
            return false;
        }
        let mut roots: Vec<&Root> = self.positive_roots().iter().collect();
        roots.sort_by_key(|r| std::cmp::Reverse(r.height()));
        let mut failed: HashSet<Vec<i64>> = HashSet::new();
        fn search(v: &[i64], roots: &[&Root], failed: &mut HashSet<Vec<i64>>) -> bool {
            if v.iter().all(|&c| c == 0) {
                return true;
            }
            if failed.contains(v) {
                return false;
            }
            for r in roots {
                if r.coords().iter().zip(v).all(|(a, b)| a <= b) {
                    let rest: Vec<i64> = v.iter().zip(r.coords()).map(|(a, b)| a - b).collect();
                    if search(&rest, roots, failed) {
                        return true;
                    }
                }
            }
            failed.insert(v.to_vec());
            false
        }
        search(v, &roots, &mut failed)
    }

    /// Positive roots `phi` with `theta - 2 phi` a nonempty sum of positive roots.
    pub fn forbidden_roots(&self) -> Vec<Root> {
        let th = self.theta().coords();
        self.positive_roots()
            .iter()
            .filter(|r| {
                let v: Vec<i64> = th.iter().zip(r.coords()).map(|(t, c)| t - 2 * c).collect();
                self.is_sum_of_positive_roots(&v)
            })
            .cloned()
            .collect()
    }

    /// Node of `supp(phi)` nearest to the affine node; `None` in type A.
    pub fn pr(&self, phi: &Root) -> Option<usize> {
        if self.simple_type().family() == crate::cartan::Family::A {
            return None;
        }
        let l = self.rank();
        let mut dist = vec![usize::MAX; l + 1];
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in self.affine_neighbours(i) {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        phi.support().into_iter().min_by_key(|&i| dist[i])
    }

    /// Both sum formulas with their per-node breakdown.
    pub fn sum_formula_report(&self) -> Result<SumFormulaReport> {
        let l = self.rank();
        let mut per_root = Vec::new();
        let mut polys = HashMap::new();
        for phi in self.long_positive_roots() {
            let p = self.poincare_p(&phi)?;
            per_root.push((phi.clone(), p.at_one()));
            polys.insert(phi, p);
        }
        let first_sum = per_root.iter().map(|(_, v)| v).sum();
        let simple_polys: Vec<_> = (1..=l)
            .map(|i| self.poincare_p_any(&Root::simple(l, i)))
            .collect::<Result<_>>()?;
        let simple_values: Vec<i64> = simple_polys.iter().map(|p| p.at_one()).collect();
        let (r, breakdown_sum, pr_consistent) = if self.simple_type().family() == crate::cartan::Family::A {
            (None, None, None)
        } else {
            let mut r = vec![0usize; l];
            let mut consistent = true;
            for (phi, p) in &polys {
                let node = self.pr(phi).expect("nonempty support");
                r[node - 1] += 1;
                consistent &= *p == simple_polys[node - 1];
            }
            let b = r.iter().zip(&simple_values).map(|(&ri, &v)| ri as i64 * v).sum();
            (Some(r), Some(b), Some(consistent))
        };
        let second_sum = self
            .long_simple_nodes()
            .into_iter()
            .map(|i| self.marks()[i - 1] * simple_values[i - 1])
            .sum();
        Ok(SumFormulaReport {
            ty: self.simple_type(),
            per_root,
            first_sum,
            first_expected: (1i64 << l) - 1,
            simple_values,
            r,
            breakdown_sum,
            pr_consistent,
            second_sum,
            second_expected: 1i64 << (l - 1),
        })
    }
}

/// All abelian ideals with their parameters, fibres and alcove words.
#[derive(Clone, Debug)]
pub struct IdealCatalog {
    ty: SimpleType,
    ideals: Vec<AbelianIdeal>,
    index: HashMap<RootSet, usize>,
    params: Vec<Option<IdealParam>>,
    words: Vec<AffineWord>,
    fibres: BTreeMap<Root, Vec<usize>>,
}

impl IdealCatalog {
    /// Enumerate the ideals and attach to each nonzero one the parameter that
    /// produces it. Fails unless the parametrization is a bijection.
    pub fn build<Q: Exact>(rs: &RootSystem<Q>) -> Result<Self> {
        let ideals = enumerate_all(rs);
        let index: HashMap<RootSet, usize> = ideals.iter().enumerate().map(|(k, a)| (a.set, k)).collect();
        let mut params: Vec<Option<IdealParam>> = vec![None; ideals.len()];
        let mut words = vec![AffineWord::empty(); ideals.len()];
        let mut fibres = BTreeMap::new();
        for phi in rs.long_positive_roots() {
            let mut fibre = Vec::new();
            for rep in rs.coset_reps(&phi)? {
                let param = IdealParam { phi: phi.clone(), coset_word: rep.word };
                let ideal = rs.from_param(&param)?;
                let k = *index
                    .get(&ideal.set)
                    .ok_or_else(|| Error::InvariantViolation(format!("parameter {phi} gives an unknown ideal")))?;
                if params[k].is_some() {
                    return Err(Error::InvariantViolation(format!("ideal {k} has two parameters")));
                }
                words[k] = rs.param_word(&param)?;
                params[k] = Some(param);
                fibre.push(k);
            }
            fibres.insert(phi, fibre);
        }
        if let Some(k) = (0..ideals.len()).find(|&k| !ideals[k].is_zero() && params[k].is_none()) {
            return Err(Error::InvariantViolation(format!("ideal {k} has no parameter")));
        }
        Ok(Self { ty: rs.simple_type(), ideals, index, params, words, fibres })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn ideals(&self) -> &[AbelianIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, a: &AbelianIdeal) -> Option<usize> {
        self.index.get(&a.set).copied()
    }

    pub fn param(&self, k: usize) -> Option<&IdealParam> {
        self.params[k].as_ref()
    }

    /// Alcove word of ideal `k`: empty for the zero ideal, `s_0 w w^` otherwise.
    pub fn word(&self, k: usize) -> &AffineWord {
        &self.words[k]
    }

    /// Indices of the ideals with associated long root `phi`.
    pub fn fibre(&self, phi: &Root) -> &[usize] {
        self.fibres.get(phi).map_or(&[], Vec::as_slice)
    }

    pub fn fibres(&self) -> &BTreeMap<Root, Vec<usize>> {
        &self.fibres
    }

    pub fn to_json(&self, k: usize) -> IdealJson {
        let a = &self.ideals[k];
        let param = self.params[k].as_ref();
        IdealJson {
            ty: self.ty.to_string(),
            roots: a.roots.iter().map(|r| r.coords().to_vec()).collect(),
            dim: a.dim(),
            assoc_long_root: param.map(|p| p.phi.coords().to_vec()),
            param: param.map(|p| ParamJson {
                phi: p.phi.coords().to_vec(),
                coset_word: p.coset_word.letters().to_vec(),
            }),
        }
    }
}
