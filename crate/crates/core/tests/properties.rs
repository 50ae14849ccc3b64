mod common;

use abelian_ideals::{Family, RootSystemQ, SimpleType};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(family: Family) {
    for ty in SimpleType::all_up_to(8).into_iter().filter(|t| t.family() == family) {
        let rs = RootSystemQ::build(ty);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (ty.rank() as u64) << 8 ^ family.letter() as u64);
        let stats = common::check_properties(&rs, &mut rng).unwrap_or_else(|e| panic!("{ty}: {e}"));
        assert!(stats.finite_words >= common::SAMPLES && stats.affine_words >= common::SAMPLES, "{ty}");
    }
}

#[test]
fn properties_a() {
    run(Family::A);
}

#[test]
fn properties_b() {
    run(Family::B);
}

#[test]
fn properties_c() {
    run(Family::C);
}

#[test]
fn properties_d() {
    run(Family::D);
}

#[test]
fn properties_e() {
    run(Family::E);
}

#[test]
fn properties_f_g() {
    run(Family::F);
    run(Family::G);
}

#[test]
fn g2_cocycle_example() {
    let rs = RootSystemQ::of("G2").unwrap();
    let w = rs.word(&[2, 1]).unwrap();
    common::check_phi_w(&rs, &w).unwrap();
}

#[test]
fn non_reduced_word_is_rejected() {
    let rs = RootSystemQ::of("A3").unwrap();
    assert!(rs.inversion_set(&rs.word(&[1, 1]).unwrap()).is_err());
    assert!(rs.affine_inversion_set(&rs.affine_word(&[0, 0]).unwrap()).is_err());
}
