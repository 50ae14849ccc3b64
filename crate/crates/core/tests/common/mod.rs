//! Lemma-level properties shared by the property suite and the acceptance run.

#![allow(dead_code)]

use abelian_ideals::affine::AffineWord;
use abelian_ideals::weyl::WeylWord;
use abelian_ideals::{Root, RootSystemQ};
use rand::Rng;

pub const SAMPLES: usize = 100;

/// Counts of what was checked, for the report line.
#[derive(Debug, Default)]
pub struct PropertyStats {
    pub finite_words: usize,
    pub affine_words: usize,
    pub length_pairs: usize,
    pub coset_pairs: usize,
    pub prefixes: usize,
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A reduced word grown by appending letters that raise the length, where the
/// length is counted from the positive roots sent negative.
pub fn random_reduced_word<R: Rng>(rs: &RootSystemQ, rng: &mut R, max_len: usize) -> WeylWord {
    let l = rs.rank();
    let mut letters = Vec::new();
    let mut len = 0;
    let target = rng.random_range(0..=max_len);
    let mut tries = 0;
    while letters.len() < target && tries < 4 * max_len + 8 {
        tries += 1;
        let i = rng.random_range(1..=l);
        letters.push(i);
        let next = rs.length(&rs.element(&rs.word(&letters).unwrap()));
        if next == len + 1 {
            len = next;
        } else {
            letters.pop();
        }
    }
    rs.word(&letters).unwrap()
}

pub fn random_word<R: Rng>(rs: &RootSystemQ, rng: &mut R, max_len: usize) -> WeylWord {
    let l = rs.rank();
    let n = rng.random_range(0..=max_len);
    rs.word(&(0..n).map(|_| rng.random_range(1..=l)).collect::<Vec<_>>()).unwrap()
}

/// A reduced affine word built by appending `s_i` only when `w alpha_i > 0`.
pub fn random_reduced_affine_word<R: Rng>(rs: &RootSystemQ, rng: &mut R, max_len: usize) -> AffineWord {
    let l = rs.rank();
    let mut w = AffineWord::empty();
    let target = rng.random_range(0..=max_len);
    let mut tries = 0;
    while w.len() < target && tries < 4 * max_len + 8 {
        tries += 1;
        let i = rng.random_range(0..=l);
        if rs.apply_affine_to_root(&w, &rs.simple_affine_root(i)).is_positive() {
            w = w.push(i);
        }
    }
    w
}

/// `Phi_w` has `l(w)` distinct positive elements summing to `rho - w rho`.
pub fn check_phi_w(rs: &RootSystemQ, w: &WeylWord) -> Result<(), String> {
    let phi = rs.inversion_set(w).map_err(|e| format!("{w}: {e}"))?;
    let elem = rs.element(w);
    if phi.len() != rs.length(&elem) || phi.len() != w.len() {
        return Err(format!("{w}: |Phi_w| = {} but l(w) = {}", phi.len(), rs.length(&elem)));
    }
    let mut distinct = phi.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != phi.len() || phi.iter().any(|r| !rs.is_positive_root(r)) {
        return Err(format!("{w}: Phi_w is not a set of positive roots"));
    }
    // doubled: 2 s(w) = 2 rho - w(2 rho)
    let mut two_s = vec![0i64; rs.rank()];
    for r in &phi {
        for (a, b) in two_s.iter_mut().zip(r.coords()) {
            *a += 2 * b;
        }
    }
    let expected = sub(rs.two_rho(), &elem.apply_int(rs.two_rho()));
    if two_s != expected {
        return Err(format!("{w}: s(w) != rho - w rho"));
    }
    Ok(())
}

/// `l(w s_i) = l(w) + 1 <=> w alpha_i > 0` and `l(s_i w) = l(w) + 1 <=> w^{-1} alpha_i > 0`.
pub fn check_length_lemma(rs: &RootSystemQ, w: &WeylWord, i: usize) -> Result<(), String> {
    let l = rs.rank();
    let elem = rs.element(w);
    let len = rs.length(&elem) as i64;
    let alpha = Root::simple(l, i);
    let right = rs.length(&elem.compose(&rs.simple_reflection(i))) as i64;
    let left = rs.length(&rs.simple_reflection(i).compose(&elem)) as i64;
    let inv: Vec<usize> = w.letters().iter().rev().copied().collect();
    let inv_elem = rs.element(&rs.word(&inv).unwrap());
    let right_pos = elem.apply_root(&alpha).is_positive();
    let left_pos = inv_elem.apply_root(&alpha).is_positive();
    if (right - len).abs() != 1 || (left - len).abs() != 1 {
        return Err(format!("{w}, s_{i}: length does not change by one"));
    }
    if (right == len + 1) != right_pos || (left == len + 1) != left_pos {
        return Err(format!("{w}, s_{i}: length lemma fails"));
    }
    Ok(())
}

/// Affine analogue: `w s_i` is reduced iff `w alpha_i > 0`; `s_i w` is reduced
/// iff `w^{-1} alpha_i > 0`; the inversion set has `l(w)` distinct positive roots.
pub fn check_affine_word(rs: &RootSystemQ, w: &AffineWord) -> Result<(), String> {
    let inv = rs.affine_inversion_set(w).map_err(|e| format!("{w}: {e}"))?;
    let mut distinct = inv.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != w.len() {
        return Err(format!("{w}: inversion set has repeats"));
    }
    for i in 0..=rs.rank() {
        let a = rs.simple_affine_root(i);
        let right_reduced = rs.affine_inversion_set(&w.push(i)).is_ok();
        if right_reduced != rs.apply_affine_to_root(w, &a).is_positive() {
            return Err(format!("{w}, s_{i}: right length lemma fails"));
        }
        let left = rs.affine_word(&[i]).unwrap().concat(w);
        let left_reduced = rs.affine_inversion_set(&left).is_ok();
        if left_reduced != rs.apply_affine_inverse_to_root(w, &a).is_positive() {
            return Err(format!("{w}, s_{i}: left length lemma fails"));
        }
    }
    Ok(())
}

/// For `w phi = theta` and a minimal representative `w^`: orthogonality,
/// the shell identity, the dominant chamber test and `dim = 1 + L(phi) + l(w^)`.
pub fn check_coset_pair(rs: &RootSystemQ, phi: &Root, w: &WeylWord, rep: &AffineWord) -> Result<(), String> {
    let l = rs.rank();
    let theta = rs.theta().coords();
    let s0 = rs.affine_generator(0);
    let w_aff = rs.affine_element(&rs.affine_word(w.letters()).unwrap());
    let base = s0.compose(&w_aff);
    let hat = rs.affine_element(rep);
    let rho2 = rs.two_rho();
    let p0 = base.apply_doubled(rho2);
    let p1 = base.compose(&hat).apply_doubled(rho2);
    let q = hat.apply_doubled(rho2);
    if rs.form_int(&sub(&p1, &p0), theta) != 0 {
        return Err(format!("phi = {phi}, {rep}: orthogonality fails"));
    }
    let lhs = rs.form_int(&p1, &p1) - rs.form_int(&p0, &p0);
    let rhs = rs.form_int(&q, &q) - rs.form_int(rho2, rho2);
    if lhs != rhs {
        return Err(format!("phi = {phi}, {rep}: shell identity fails ({lhs} vs {rhs})"));
    }
    if (0..l).any(|j| rs.form_int(&q, Root::simple(l, j + 1).coords()) < 0) {
        return Err(format!("phi = {phi}, {rep}: rho-point outside the dominant chamber"));
    }
    let param = abelian_ideals::ideals::IdealParam { phi: phi.clone(), coset_word: rep.clone() };
    let a = rs.from_param(&param).map_err(|e| e.to_string())?;
    let expected = 1 + rs.l_value(phi).map_err(|e| e.to_string())? + rep.len() as i64;
    if a.dim() as i64 != expected {
        return Err(format!("phi = {phi}, {rep}: dim {} != 1 + L + l = {expected}", a.dim()));
    }
    Ok(())
}

/// For the word `s_{j1}...s_{jk}` taking the long simple root `alpha_i` to
/// `theta`, every `theta - sum_{k<=r} (|theta|^2/|alpha_jk|^2) alpha_jk` is a
/// positive root and the last one is `alpha_i`.
pub fn check_prefix_positivity(rs: &RootSystemQ, i: usize) -> Result<usize, String> {
    let l = rs.rank();
    let alpha = Root::simple(l, i);
    let w = rs.minimal_word_to_theta(&alpha).map_err(|e| e.to_string())?;
    let theta = rs.theta().coords();
    let tt = rs.form_int(theta, theta);
    let mut cur = theta.to_vec();
    for &j in w.letters() {
        let aj = Root::simple(l, j);
        let ratio = tt / rs.form_int(aj.coords(), aj.coords());
        cur[j - 1] -= ratio;
        if !rs.is_positive_root(&Root::new(cur.clone())) {
            return Err(format!("alpha_{i}: prefix ending in s_{j} gives {cur:?}"));
        }
    }
    if cur != alpha.coords() {
        return Err(format!("alpha_{i}: final prefix gives {cur:?}"));
    }
    Ok(w.len())
}

/// Run every property on `SAMPLES` random draws per family of objects.
pub fn check_properties<R: Rng>(rs: &RootSystemQ, rng: &mut R) -> Result<PropertyStats, String> {
    let l = rs.rank();
    let n = rs.num_positive_roots();
    let mut stats = PropertyStats::default();
    for _ in 0..SAMPLES {
        let w = random_reduced_word(rs, rng, n);
        check_phi_w(rs, &w)?;
        stats.finite_words += 1;
        let v = random_word(rs, rng, n);
        check_length_lemma(rs, &v, rng.random_range(1..=l))?;
        stats.length_pairs += 1;
        let a = random_reduced_affine_word(rs, rng, 2 * n);
        check_affine_word(rs, &a)?;
        stats.affine_words += 1;
    }
    let long = rs.long_positive_roots();
    let mut pairs = Vec::new();
    for phi in &long {
        let reps = rs.minimal_coset_reps(phi).map_err(|e| e.to_string())?;
        for rep in reps {
            pairs.push((phi.clone(), rep));
        }
    }
    let draws = if pairs.len() <= SAMPLES { (0..pairs.len()).collect::<Vec<_>>() } else {
        (0..SAMPLES).map(|_| rng.random_range(0..pairs.len())).collect()
    };
    for k in draws {
        let (phi, rep) = &pairs[k];
        let w = rs.minimal_word_to_theta(phi).map_err(|e| e.to_string())?;
        check_coset_pair(rs, phi, &w, rep)?;
        stats.coset_pairs += 1;
    }
    for i in rs.long_simple_nodes() {
        check_prefix_positivity(rs, i)?;
        stats.prefixes += 1;
    }
    Ok(stats)
}
