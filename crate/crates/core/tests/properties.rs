use std::sync::Arc;

use nichols_core::braiding::BraidingMatrix;
use nichols_core::catalog::{nichols_presentation, ROOT_ORDER};
use nichols_core::hopf::{coproduct, TensorElement};
use nichols_core::lyndon::Word;
use nichols_core::pbw::{orient, RewriteSystem};
use nichols_core::scalars::{parse_scalar, Coefficient};
use nichols_core::smash::{GroupWord, SmashAlgebra, SmashElement, Term};
use nichols_core::syntax::parse_expr;
use nichols_core::{Cyclo, Rat, Scalar};
use proptest::prelude::*;

fn cyclo(coeffs: &[i64]) -> Cyclo {
    coeffs.iter().enumerate().fold(Cyclo::from_int(0), |acc, (k, c)| acc.add_ref(&Cyclo::zeta(12, k as i64).scale(&Rat::from_integer((*c).into()))))
}

fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(-4i64..=4, 0..6).prop_map(|v| cyclo(&v))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    let names = ["q12", "q21", "mu1", "lambda12"];
    prop::collection::vec((arb_cyclo(), prop::collection::vec((0usize..4, -2i32..=2), 0..3)), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, (c, vars)| {
            let t = vars.into_iter().fold(Scalar::constant(c), |t, (k, e)| {
                let e = if names[k].starts_with('q') { e } else { e.abs() };
                t.times(&Scalar::param(names[k]).pow_i(e as i64).unwrap())
            });
            acc.plus(&t)
        })
    })
}

fn arb_word(theta: u8, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..theta, 0..=max).prop_map(Word::new)
}

fn arb_element(max_len: usize) -> impl Strategy<Value = SmashElement<Scalar>> {
    prop::collection::vec((arb_word(2, max_len), prop::collection::vec(-2i64..=2, 2), arb_scalar()), 0..4).prop_map(|terms| {
        let mut e = SmashElement::zero();
        for (w, g, c) in terms {
            e.add_term(Term::new(w, GroupWord::new(g)), c);
        }
        e
    })
}

fn generic() -> SmashAlgebra<Scalar> {
    let p = Scalar::param;
    SmashAlgebra::new(BraidingMatrix::new(vec![vec![p("q11"), p("q12")], vec![p("q21"), p("q22")]]).unwrap())
}

fn brute_is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

fn a2_system() -> RewriteSystem<Scalar> {
    let p = nichols_presentation("A2-1a").unwrap();
    let alg = Arc::new(SmashAlgebra::new(p.case.braiding()));
    let mut sys = orient(alg, &p.relations, Some((&p.case.lset, &p.case.heights))).unwrap();
    sys.complete(2 * (p.case.top_degree() + 1)).unwrap();
    sys
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclo_ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul_ref(&a.inverse().unwrap()), Cyclo::from_int(1));
        }
    }

    #[test]
    fn scalar_ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn scalar_syntax_round_trip(a in arb_scalar()) {
        let text = a.to_syntax(ROOT_ORDER);
        prop_assert_eq!(parse_scalar::<Rat>(&text, ROOT_ORDER).unwrap(), a, "{}", text);
    }

    #[test]
    fn element_syntax_round_trip(e in arb_element(5)) {
        let alg = generic();
        let text = e.to_syntax(ROOT_ORDER);
        let back = parse_expr(&text, ROOT_ORDER).unwrap().eval(&alg).unwrap();
        prop_assert_eq!(back, e, "{}", text);
    }

    #[test]
    fn lyndon_factorization(w in arb_word(3, 10)) {
        let f = w.lyndon_factors();
        prop_assert_eq!(f.iter().fold(Word::default(), |acc, u| acc.concat(u)), w.clone());
        prop_assert!(f.iter().all(|u| brute_is_lyndon(u.letters())));
        prop_assert!(f.windows(2).all(|p| p[0] >= p[1]));
        if !w.is_empty() {
            prop_assert_eq!(w.is_lyndon().unwrap(), brute_is_lyndon(w.letters()));
        }
    }

    #[test]
    fn shirshov_split(w in arb_word(3, 10)) {
        prop_assume!(brute_is_lyndon(w.letters()) && w.len() > 1);
        let (u, v) = w.shirshov().unwrap();
        prop_assert_eq!(u.concat(&v), w.clone());
        prop_assert!(brute_is_lyndon(u.letters()) && brute_is_lyndon(v.letters()));
        let minimal = (1..w.len()).map(|k| &w.letters()[k..]).min().unwrap();
        prop_assert_eq!(v.letters(), minimal);
    }

    #[test]
    fn smash_product_associative(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
        let alg = generic();
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn coproduct_is_multiplicative(a in arb_element(3), b in arb_element(3)) {
        let alg = generic();
        let lhs = coproduct(&alg, &alg.mul(&a, &b));
        let rhs = coproduct(&alg, &a).mul(&coproduct(&alg, &b), &alg);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative(a in arb_element(3)) {
        // (Delta (x) id) Delta = (id (x) Delta) Delta, compared on the triple tensor
        // flattened through the pair ((u, v), w) versus (u, (v, w)).
        let alg = generic();
        let d = coproduct(&alg, &a);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((s, t), c) in d.terms() {
            let ds = coproduct(&alg, &SmashElement::monomial(s.clone(), Scalar::one()));
            for ((u, v), c2) in ds.terms() {
                left.push((u.clone(), v.clone(), t.clone(), c.times(c2)));
            }
            let dt = coproduct(&alg, &SmashElement::monomial(t.clone(), Scalar::one()));
            for ((v, w), c2) in dt.terms() {
                right.push((s.clone(), v.clone(), w.clone(), c.times(c2)));
            }
        }
        let collect = |v: Vec<(Term, Term, Term, Scalar)>| {
            let mut m: std::collections::BTreeMap<String, Scalar> = std::collections::BTreeMap::new();
            for (x, y, z, c) in v {
                let e = m.entry(format!("{x} | {y} | {z}")).or_insert_with(Scalar::zero);
                *e = e.plus(&c);
            }
            m.retain(|_, c| !c.is_zero());
            m
        };
        prop_assert_eq!(collect(left), collect(right));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduce_idempotent_and_linear(a in arb_element(6), b in arb_element(6), c in arb_scalar()) {
        let sys = a2_system();
        let ra = sys.reduce(&a).unwrap();
        prop_assert_eq!(sys.reduce(&ra).unwrap(), ra.clone());
        let rb = sys.reduce(&b).unwrap();
        prop_assert_eq!(sys.reduce(&a.plus(&b.scale(&c))).unwrap(), ra.plus(&rb.scale(&c)));
        for (t, _) in ra.terms() {
            prop_assert!(sys.is_normal(&t.word));
        }
    }

    #[test]
    fn reduce_respects_products(a in arb_element(3), b in arb_element(3)) {
        let sys = a2_system();
        let alg = sys.algebra().clone();
        let direct = sys.reduce(&alg.mul(&a, &b)).unwrap();
        let staged = sys.reduce(&alg.mul(&sys.reduce(&a).unwrap(), &sys.reduce(&b).unwrap())).unwrap();
        prop_assert_eq!(direct, staged);
    }
}

#[test]
fn tensor_zero_is_neutral() {
    let alg = generic();
    let x = SmashElement::generator(0);
    let d = coproduct(&alg, &x);
    assert_eq!(d.plus(&TensorElement::zero()), d);
}
