use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::catalog::{cubic_cone, cubic_cone_section, cubic_minors, cubic_poly_ring, quotient};
use crate::coeff::Field;
use crate::poly::Polynomial;

fn v1(p: &Polynomial) -> FreeVector {
    FreeVector::new(vec![p.clone()])
}

fn vecs(ring: &QuotientRing, rows: &[&[&str]]) -> Vec<FreeVector> {
    rows.iter()
        .map(|r| FreeVector::new(r.iter().map(|s| ring.parse(s).unwrap()).collect()))
        .collect()
}

#[test]
fn normal_form_examples() {
    let kx = quotient(Field::Rational, &["X"], &[]);
    let x = kx.parse("X").unwrap();
    let gb = buchberger(&kx, 1, &[v1(&x)]).unwrap();
    assert!(normal_form(&v1(&x.mul(&x)), &gb).unwrap().is_zero());

    let p = cubic_poly_ring(Field::Rational);
    let poly_ring = QuotientRing::polynomial_ring(&p);
    let minors: Vec<FreeVector> = cubic_minors(&p).iter().map(v1).collect();
    let gb = buchberger(&poly_ring, 1, &minors).unwrap();
    let yw = p.parse("Y*W - Z^2").unwrap();
    assert!(normal_form(&v1(&yw), &gb).unwrap().is_zero());

    let k3 = quotient(Field::Rational, &["Y", "Z", "W"], &[]);
    let gens = vecs(&k3, &[&["Y^2"], &["Y*Z"], &["Z^2 - Y*W"]]);
    let gb = buchberger(&k3, 1, &gens).unwrap();
    let w = v1(&k3.parse("W").unwrap());
    assert_eq!(normal_form(&w, &gb).unwrap(), w);
    assert!(matches!(
        normal_form(&FreeVector::zero(k3.poly_ring(), 2), &gb),
        Err(Error::Dimension { .. })
    ));
}

/// Division of `f` by a list, leading terms only; independent of the engine.
fn divide(f: &Polynomial, by: &[Polynomial]) -> Polynomial {
    let mut f = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some(t) = f.leading_term().cloned() {
        match by
            .iter()
            .find(|g| g.leading_monomial().unwrap().divides(&t.mono))
        {
            Some(g) => {
                let lt = g.leading_term().unwrap();
                let q = lt.mono.quotient_of(&t.mono);
                f = f.sub_mul_term(&t.coeff.div(&lt.coeff), &q, g);
            }
            None => {
                let head = Polynomial::monomial(f.ring(), t.coeff.clone(), t.mono.clone());
                rem = rem.add(&head);
                f = f.sub(&head);
            }
        }
    }
    rem
}

#[test]
fn buchberger_examples() {
    let kx = quotient(Field::Rational, &["X"], &[]);
    let x = kx.parse("X").unwrap();
    let gb = buchberger(&kx, 1, &[v1(&x)]).unwrap();
    assert_eq!(gb.elements(), &[v1(&x)]);

    let k3 = quotient(Field::Rational, &["Y", "Z", "W"], &[]);
    let gens: Vec<Polynomial> = ["Y^2", "Y*Z", "Z^2 - Y*W"]
        .iter()
        .map(|s| k3.parse(s).unwrap())
        .collect();
    // Hand oracle: every S-polynomial divides to zero by the three generators.
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (&gens[i], &gens[j]);
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            let l = la.lcm(lb);
            let one = Field::Rational.one();
            let s = a
                .mul_term(&one, &la.quotient_of(&l))
                .sub(&b.mul_term(&one, &lb.quotient_of(&l)));
            assert!(divide(&s, &gens).is_zero());
        }
    }
    let gb = buchberger(&k3, 1, &gens.iter().map(v1).collect::<Vec<_>>()).unwrap();
    let mut got: Vec<Polynomial> = gb.elements().iter().map(|v| v.get(0).clone()).collect();
    let mut want = gens.clone();
    got.sort_by_key(|p| p.to_string());
    want.sort_by_key(|p| p.to_string());
    assert_eq!(got, want);

    for field in [Field::Rational, Field::Prime(32003)] {
        let p = cubic_poly_ring(field);
        let poly_ring = QuotientRing::polynomial_ring(&p);
        let minors: Vec<FreeVector> = cubic_minors(&p).iter().map(v1).collect();
        let gb = buchberger(&poly_ring, 1, &minors).unwrap();
        assert!(gb.is_groebner());
        assert!(gb.check_reduced());
        for m in &minors {
            assert!(gb.contains(m));
        }
    }
}

#[test]
fn syzygy_examples() {
    let kx = quotient(Field::Rational, &["X"], &[]);
    let x = kx.parse("X").unwrap();
    assert!(syzygy_basis(&kx, 1, &[v1(&x)]).unwrap().is_empty());

    let t = cubic_cone_section(Field::Prime(32003));
    let gens = vecs(&t, &[&["Y"], &["Z"]]);
    let syz = syzygy_basis(&t, 1, &gens).unwrap();
    let hand = vecs(&t, &[&["Y", "0"], &["Z", "0"], &["0", "Y"], &["W", "-Z"]]);
    let t_arc = t.clone();
    for s in &syz {
        let combo = t.reduce(
            &s.get(0)
                .mul(gens[0].get(0))
                .add(&s.get(1).mul(gens[1].get(0))),
        );
        assert!(combo.is_zero());
        assert!(submodule_membership(&t_arc, s, &hand).unwrap().0);
    }
    for h in &hand {
        assert!(submodule_membership(&t_arc, h, &syz).unwrap().0);
    }

    let gens = vecs(&t, &[&["X"], &["Y"], &["Z"]]);
    let syz = syzygy_basis(&t, 1, &gens).unwrap();
    let e1 = vecs(&t, &[&["1", "0", "0"]]).remove(0);
    assert!(submodule_membership(&t_arc, &e1, &syz).unwrap().0);
}

#[test]
fn kernel_examples() {
    let t = cubic_cone_section(Field::Prime(32003));
    let p = t.poly_ring();
    let a = Matrix::from_rows(p, 1, vec![vec![t.parse("Y").unwrap()]]).unwrap();
    let ker: Vec<Polynomial> = kernel_of_matrix(&t, &a)
        .unwrap()
        .iter()
        .map(|v| v.get(0).clone())
        .collect();
    let j = [t.parse("Y").unwrap(), t.parse("Z").unwrap()];
    assert!(ideal_equal(&t, &ker, &j).unwrap());
    assert!(kernel_of_matrix(&t, &Matrix::identity(p, 3))
        .unwrap()
        .is_empty());
}

#[test]
fn membership_examples() {
    let p = cubic_poly_ring(Field::Rational);
    let ring = QuotientRing::polynomial_ring(&p);
    let minors: Vec<FreeVector> = cubic_minors(&p).iter().map(v1).collect();
    let target = v1(&p.parse("Y*W - Z^2").unwrap());
    let (ok, lift) = submodule_membership(&ring, &target, &minors).unwrap();
    assert!(ok);
    let lift = lift.unwrap();
    let rebuilt = (0..3).fold(Polynomial::zero(&p), |acc, i| {
        acc.add(&lift.get(i).mul(minors[i].get(0)))
    });
    assert_eq!(rebuilt, *target.get(0));

    let k3 = quotient(Field::Rational, &["Y", "Z", "W"], &[]);
    let gens = vecs(&k3, &[&["Y^2"], &["Y*Z"], &["Z^2 - Y*W"]]);
    let w = vecs(&k3, &[&["W"]]).remove(0);
    assert_eq!(submodule_membership(&k3, &w, &gens).unwrap(), (false, None));
    let (ok, lift) =
        submodule_membership(&k3, &FreeVector::zero(k3.poly_ring(), 1), &gens).unwrap();
    assert!(ok && lift.unwrap().is_zero());
}

#[test]
fn colon_examples() {
    let kx = quotient(Field::Rational, &["X"], &[]);
    let x = kx.parse("X").unwrap();
    let c = colon_ideal(&kx, &[x.mul(&x)], &[x.clone()]).unwrap();
    assert!(ideal_equal(&kx, &c, &[x]).unwrap());

    for field in [Field::Rational, Field::Prime(32003)] {
        let t = cubic_cone_section(field);
        let g = |s: &str| t.parse(s).unwrap();
        let c = colon_ideal(&t, &[], &[g("X"), g("Y")]).unwrap();
        assert!(ideal_equal(&t, &c, &[g("Y"), g("Z")]).unwrap());
        let c = colon_ideal(&t, &[], &[g("Y"), g("Z")]).unwrap();
        assert!(ideal_equal(&t, &c, &[g("Y")]).unwrap());
    }
}

#[test]
fn ideal_equal_examples() {
    let k2 = quotient(Field::Rational, &["X", "Y"], &[]);
    let g = |s: &str| k2.parse(s).unwrap();
    assert!(ideal_equal(&k2, &[g("X"), g("Y")], &[g("Y"), g("X")]).unwrap());
    let t = cubic_cone_section(Field::Rational);
    let g = |s: &str| t.parse(s).unwrap();
    assert!(ideal_equal(&t, &[g("X"), g("Y"), g("Z")], &[g("Y"), g("Z")]).unwrap());
    assert!(!ideal_equal(&t, &[g("Y")], &[g("Y"), g("Z")]).unwrap());
}

#[test]
fn reduced_basis_is_deterministic() {
    let r = cubic_cone(Field::Prime(32003));
    let gens = vecs(&r, &[&["X", "Y"], &["Y", "Z"], &["Z^2", "W"]]);
    let a = buchberger(&r, 2, &gens).unwrap();
    let b = buchberger(&r, 2, &gens).unwrap();
    assert_eq!(a.elements(), b.elements());
    assert!(a.is_groebner());
    assert!(a.check_reduced());
}

fn small_poly(ring: Arc<QuotientRing>) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..4, prop::collection::vec(0u32..3, 4)), 0..4).prop_map(move |ts| {
        let p = ring.poly_ring();
        let terms = ts
            .into_iter()
            .map(|(c, e)| crate::poly::Term {
                mono: crate::monomial::Monomial::new(e),
                coeff: p.field().from_i64(c),
            })
            .collect();
        ring.reduce(&Polynomial::from_terms(p, terms))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn groebner_properties(
        gens in prop::collection::vec(prop::collection::vec(small_poly(cubic_cone(Field::Prime(32003))), 2), 1..4),
        coeffs in prop::collection::vec(small_poly(cubic_cone(Field::Prime(32003))), 3),
        probe in prop::collection::vec(small_poly(cubic_cone(Field::Prime(32003))), 2),
    ) {
        let r = cubic_cone(Field::Prime(32003));
        let gens: Vec<FreeVector> = gens.into_iter().map(FreeVector::new).collect();
        let gb = buchberger(&r, 2, &gens).unwrap();
        prop_assert!(gb.is_groebner());
        let probe = FreeVector::new(probe);
        let nf = gb.normal_form(&probe).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&probe.sub(&nf)));

        let mut w = FreeVector::zero(r.poly_ring(), 2);
        for (g, c) in gens.iter().zip(&coeffs) {
            w = w.add(&g.scale(c));
        }
        let w = r.reduce_vector(&w);
        let (ok, lift) = submodule_membership(&r, &w, &gens).unwrap();
        prop_assert!(ok);
        let lift = lift.unwrap();
        let mut rebuilt = FreeVector::zero(r.poly_ring(), 2);
        for (g, c) in gens.iter().zip(lift.coords()) {
            rebuilt = rebuilt.add(&g.scale(c));
        }
        prop_assert_eq!(r.reduce_vector(&rebuilt), w);

        let syz = syzygy_basis(&r, 2, &gens).unwrap();
        for s in &syz {
            let mut acc = FreeVector::zero(r.poly_ring(), 2);
            for (g, c) in gens.iter().zip(s.coords()) {
                acc = acc.add(&g.scale(c));
            }
            prop_assert!(r.reduce_vector(&acc).is_zero());
        }
    }
}
