use super::*;
use crate::catalog::{cubic_cone, cubic_cone_section, quotient};
use crate::coeff::Field;
use crate::ideal::Ideal;

const P: Field = Field::Prime(32003);

fn cyc(ring: &Arc<QuotientRing>, gens: &[&str]) -> PresentedModule {
    Ideal::parse(ring, gens).unwrap().quotient_module()
}

#[test]
fn koszul_and_small_resolutions() {
    let kx = quotient(Field::Rational, &["X"], &[]);
    let res = free_resolution(&cyc(&kx, &["X"]), 4, true).unwrap();
    assert_eq!(res.ranks(), vec![1, 1]);

    let kxy = quotient(Field::Rational, &["X", "Y"], &[]);
    let res = free_resolution(&cyc(&kxy, &["X", "Y"]), 4, true).unwrap();
    assert_eq!(res.ranks(), vec![1, 2, 1]);
    assert!(res.is_complex());
    assert!(res.is_exact().unwrap());
}

#[test]
fn section_resolution_has_betti_1_2_4() {
    let t = cubic_cone_section(P);
    let res = free_resolution(&cyc(&t, &["Y", "Z"]), 2, true).unwrap();
    assert_eq!(res.ranks(), vec![1, 2, 4]);
    assert!(res.is_complex());
    let d2 = &res.differentials()[1];
    assert!(d2
        .columns()
        .iter()
        .all(|c| c.coords().iter().all(|e| !e.is_unit_constant())));
    let longer = free_resolution(&cyc(&t, &["Y", "Z"]), 4, true).unwrap();
    assert!(longer.is_complex());
    assert!(longer.is_exact().unwrap());
}

#[test]
fn hom_and_duals() {
    let t = cubic_cone_section(P);
    let finite = cyc(&t, &["Y", "Z", "W^2"]);
    let free = PresentedModule::free(&t, 1);
    assert_eq!(
        hom_module(&free, &finite).unwrap().module().k_dimension(),
        finite.k_dimension()
    );

    let r_mod_i = cyc(&t, &["Y"]);
    let dual = dual_module(&r_mod_i).unwrap();
    let j = Ideal::parse(&t, &["Y", "Z"]).unwrap();
    let ann_j = Ideal::parse(&t, &["Y"]).unwrap();
    assert!(dual.module().annihilator().unwrap().equals(&ann_j).unwrap());
    let images: Vec<_> = dual.maps().iter().map(|a| a.entry(0, 0).clone()).collect();
    assert!(Ideal::new(&t, &images).equals(&j).unwrap());

    let dual_tj = dual_module(&cyc(&t, &["Y", "Z"])).unwrap();
    assert!(dual_tj.module().annihilator().unwrap().equals(&j).unwrap());

    let r = cubic_cone(P);
    assert!(dual_module(&cyc(&r, &["X", "Y"]))
        .unwrap()
        .module()
        .is_zero_module());
    let d2 = dual_module(&PresentedModule::free(&r, 2)).unwrap();
    assert_eq!(d2.module().rank(), 2);
    assert!(d2.module().relations().is_empty());
}

#[test]
fn evaluation_respects_relations() {
    let t = cubic_cone_section(P);
    let m = cyc(&t, &["Y"]);
    let hom = dual_module(&m).unwrap();
    let p = t.poly_ring();
    for rel in hom.module().relations() {
        let v = hom.evaluate(rel, &FreeVector::unit(p, 1, 0)).unwrap();
        assert!(v.is_zero());
    }
    for k in 0..hom.maps().len() {
        let a = hom.maps()[k].clone();
        assert_eq!(
            hom.coordinates(&a).unwrap(),
            FreeVector::unit(p, hom.maps().len(), k)
        );
    }
}

#[test]
fn ext_groups() {
    let t = cubic_cone_section(P);
    let tt = PresentedModule::free(&t, 1);
    let e1 = ext_module(1, &cyc(&t, &["Y", "Z"]), &tt).unwrap();
    assert!(!e1.is_zero_module());
    assert_eq!(e1.k_dimension(), KDim::Finite(1));
    assert!(ext_module(1, &tt, &cyc(&t, &["W"]))
        .unwrap()
        .is_zero_module());

    let k = cyc(&t, &["Y", "Z", "W"]);
    let n = cyc(&t, &["W^2"]);
    let e0 = ext_module(0, &k, &n).unwrap();
    assert_eq!(
        e0.k_dimension(),
        hom_module(&k, &n).unwrap().module().k_dimension()
    );
    assert_eq!(e0.k_dimension(), KDim::Finite(2));
}

#[test]
fn ext_does_not_depend_on_resolution() {
    let t = cubic_cone_section(P);
    let m = cyc(&t, &["Y", "Z", "W"]);
    let n = cyc(&t, &["W^3"]);
    for i in 0..3 {
        let a = ext_from_resolution(&free_resolution(&m, i + 1, true).unwrap(), i, &n).unwrap();
        let b = ext_from_resolution(&free_resolution(&m, i + 1, false).unwrap(), i, &n).unwrap();
        assert_eq!(a.k_dimension(), b.k_dimension(), "Ext^{i}");
    }
}

#[test]
fn dual_maps_are_functorial() {
    let t = cubic_cone_section(P);
    let m = cyc(&t, &["Y"]);
    let dm = dual_module(&m).unwrap();
    let id = ModuleHomomorphism::identity(&m);
    assert!(dual_map(&id, &dm, &dm)
        .unwrap()
        .equals(&ModuleHomomorphism::identity(dm.module()))
        .unwrap());
    let zero = ModuleHomomorphism::zero(&m, &m);
    assert!(dual_map(&zero, &dm, &dm).unwrap().is_zero_map().unwrap());

    let free = PresentedModule::free(&t, 1);
    let df = dual_module(&free).unwrap();
    let w = Matrix::from_rows(t.poly_ring(), 1, vec![vec![t.parse("W").unwrap()]]).unwrap();
    let mul = ModuleHomomorphism::new(&free, &free, w.clone()).unwrap();
    let dmul = dual_map(&mul, &df, &df).unwrap();
    assert!(dmul
        .equals(&ModuleHomomorphism::new(df.module(), df.module(), w).unwrap())
        .unwrap());
}

#[test]
fn reflexivity() {
    let t = cubic_cone_section(P);
    let rep = is_reflexive(&PresentedModule::free(&t, 1)).unwrap();
    assert!(rep.reflexive && rep.torsionless);
    assert_eq!(rep.coker_dim, KDim::Finite(0));

    let rep = is_reflexive(&cyc(&t, &["Y"])).unwrap();
    assert_eq!(
        rep,
        ReflexivityReport {
            reflexive: false,
            torsionless: true,
            coker_dim: KDim::Finite(1)
        }
    );

    let r = cubic_cone(P);
    let i = Ideal::parse(&r, &["X", "Y"]).unwrap().as_module().unwrap();
    assert!(is_reflexive(&i).unwrap().reflexive);
}

#[test]
fn lemma_composite_is_identity() {
    let t = cubic_cone_section(P);
    assert!(lemma_composite_check(&PresentedModule::free(&t, 1)).unwrap());
    assert!(lemma_composite_check(&cyc(&t, &["Y", "Z"])).unwrap());
    let r = cubic_cone(P);
    assert!(lemma_composite_check(&cyc(&r, &["X", "Y"])).unwrap());
}
