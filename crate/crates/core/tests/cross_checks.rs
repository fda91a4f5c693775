use peakforge_core::peak::{self, InternalTable};
use peakforge_core::{Composition, Cyclo, MrElement, RatFunc, Rational, SymBasis, SymElement};

fn q<const R: usize>() -> Cyclo<R> {
    Cyclo::<R>::zeta()
}

#[test]
fn internal_product_agrees_with_fqsym_composition() {
    // R_I * R_J computed in Sym and through F-basis composition in FQSym
    for n in 1..=4 {
        for i in Composition::all(n) {
            for j in Composition::all(n) {
                let a = SymElement::<Rational>::ribbon(i.clone());
                let b = SymElement::<Rational>::ribbon(j.clone());
                let direct = a.internal_product(&b).to_fqsym();
                let via = a.to_fqsym().internal_product(&b.to_fqsym());
                assert_eq!(direct, via, "{} * {}", i, j);
            }
        }
    }
}

#[test]
fn peak_dimensions_at_fifth_root() {
    let dims: Vec<usize> = peak::peak_tower(&q::<5>(), 7).iter().map(|s| s.rank()).collect();
    let want = peak::peak_series(5, 7);
    assert_eq!(dims.iter().map(|&d| d as i64).collect::<Vec<_>>(), want);
}

#[test]
fn sharp_image_at_root_of_unity_is_a_left_ideal() {
    let ring = peak::q_image_tower(&q::<3>(), 3);
    for n in 1..=3 {
        let t = InternalTable::mr(n);
        assert!(peak::check_left_ideal(&t, &ring[n]).closed());
    }
}

#[test]
fn bsym_is_closed() {
    for n in 1..=3 {
        let t = InternalTable::mr(n);
        let sub = peak::bsym_subspace::<Rational>(n);
        assert_eq!(sub.rank(), 1 << n);
        assert!(peak::check_subalgebra(&t, &sub).closed());
    }
}

#[test]
fn theta_specializes_sharp() {
    // dropping colors after the sharp transform gives the (1-q) transform
    let q = RatFunc::q();
    for n in 1..=4 {
        let s = MrElement::<RatFunc>::complete(n, false).sharp(&q).specialize_bar();
        let t = SymElement::<RatFunc>::complete(n).theta_q(&q);
        assert_eq!(s.to_basis(SymBasis::S), t.to_basis(SymBasis::S));
    }
}

#[test]
fn generic_q_has_no_peak_collapse() {
    let q = RatFunc::q();
    let dims: Vec<usize> = peak::q_image_tower(&q, 3).iter().map(|s| s.rank()).collect();
    assert_eq!(dims, [1, 2, 6, 18]);
    assert!(q.pow(3) != RatFunc::one());
}
