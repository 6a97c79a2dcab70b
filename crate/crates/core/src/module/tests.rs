use super::*;
use crate::catalog::{cubic_cone, cubic_cone_section, quotient};
use crate::coeff::Field;

fn col(ring: &QuotientRing, entries: &[&str]) -> FreeVector {
    FreeVector::new(entries.iter().map(|s| ring.parse(s).unwrap()).collect())
}

fn mat(ring: &QuotientRing, nrows: usize, cols: &[&[&str]]) -> Matrix {
    Matrix::from_columns(
        ring.poly_ring(),
        nrows,
        cols.iter().map(|c| col(ring, c)).collect(),
    )
    .unwrap()
}

#[test]
fn k_dimension_of_artinian_quotients() {
    let k1 = quotient(Field::Rational, &["X"], &[]);
    let m = PresentedModule::cyclic(&k1, &[k1.parse("X^3").unwrap()]);
    assert_eq!(m.k_dimension(), KDim::Finite(3));
    assert_eq!(PresentedModule::free(&k1, 1).k_dimension(), KDim::Infinite);

    let t = cubic_cone_section(Field::Prime(32003));
    let g = |s: &str| t.parse(s).unwrap();
    assert_eq!(
        PresentedModule::cyclic(&t, &[g("Y"), g("Z")]).k_dimension(),
        KDim::Infinite
    );
    assert_eq!(
        PresentedModule::cyclic(&t, &[g("Y"), g("Z"), g("W")]).k_dimension(),
        KDim::Finite(1)
    );
    // T/(W^2): basis 1, W, Y, YW, Z, ZW
    assert_eq!(
        PresentedModule::cyclic(&t, &[g("W^2")]).k_dimension(),
        KDim::Finite(6)
    );
    assert!(PresentedModule::cyclic(&t, &[g("1")]).is_zero_module());
}

#[test]
fn annihilators() {
    let t = cubic_cone_section(Field::Prime(32003));
    let g = |s: &str| t.parse(s).unwrap();
    let m = PresentedModule::cyclic(&t, &[g("Y"), g("Z")]);
    assert!(m
        .annihilator()
        .unwrap()
        .equals(&Ideal::new(&t, &[g("Y"), g("Z")]))
        .unwrap());
    let a = PresentedModule::cyclic(&t, &[g("Y")]);
    let b = PresentedModule::cyclic(&t, &[g("W")]);
    let ann = a.direct_sum(&b).unwrap().annihilator().unwrap();
    let meet = Ideal::new(&t, &[g("Y")])
        .intersect(&Ideal::new(&t, &[g("W")]))
        .unwrap();
    assert!(ann.equals(&meet).unwrap());
    assert!(PresentedModule::zero(&t)
        .annihilator()
        .unwrap()
        .contains(&g("1"))
        .unwrap());
}

#[test]
fn kernel_and_cokernel_of_multiplication() {
    let t = cubic_cone_section(Field::Rational);
    let tt = PresentedModule::free(&t, 1);
    let y = ModuleHomomorphism::new(&tt, &tt, mat(&t, 1, &[&["Y"]])).unwrap();
    let (k, iota) = y.kernel().unwrap();
    assert_eq!(k.rank(), 2);
    let image: Vec<Polynomial> = iota
        .matrix()
        .columns()
        .iter()
        .map(|c| c.get(0).clone())
        .collect();
    assert!(Ideal::new(&t, &image)
        .equals(&Ideal::parse(&t, &["Y", "Z"]).unwrap())
        .unwrap());
    assert!(iota.is_injective().unwrap());
    assert!(y.compose(&iota).unwrap().is_zero_map().unwrap());

    let (c, pi) = y.cokernel().unwrap();
    assert_eq!(c.rank(), 1);
    assert!(c
        .annihilator()
        .unwrap()
        .equals(&Ideal::parse(&t, &["Y"]).unwrap())
        .unwrap());
    assert!(pi.is_surjective().unwrap());
    assert!(!y.is_injective().unwrap());
    assert!(ModuleHomomorphism::identity(&tt).is_isomorphism().unwrap());
}

#[test]
fn maps_must_respect_relations() {
    let t = cubic_cone_section(Field::Rational);
    let src = PresentedModule::cyclic(&t, &[t.parse("Y").unwrap()]);
    let tgt = PresentedModule::free(&t, 1);
    let err = ModuleHomomorphism::new(&src, &tgt, mat(&t, 1, &[&["1"]]));
    assert!(matches!(err, Err(Error::NotWellDefined(_))));
    // y kills Y and Z in T, so multiplication by Z is well defined on T/(Y).
    assert!(ModuleHomomorphism::new(&src, &tgt, mat(&t, 1, &[&["Z"]])).is_ok());
    assert!(matches!(
        ModuleHomomorphism::new(&src, &tgt, mat(&t, 2, &[&["1", "0"]])),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn minimize_drops_unit_pivots() {
    let r = cubic_cone(Field::Prime(32003));
    // coker [[1, 0], [X, Y]] ≅ R/(Y)
    let m = PresentedModule::new(&r, 2, vec![col(&r, &["1", "X"]), col(&r, &["0", "Y"])]).unwrap();
    let min = m.minimize();
    assert_eq!(min.kept, vec![1]);
    assert_eq!(min.module.rank(), 1);
    let iso = ModuleHomomorphism::new(&m, &min.module, min.to_min.clone()).unwrap();
    assert!(iso.is_isomorphism().unwrap());
    assert!(min
        .module
        .annihilator()
        .unwrap()
        .equals(&Ideal::parse(&r, &["Y"]).unwrap())
        .unwrap());
}

#[test]
fn subquotients() {
    let t = cubic_cone_section(Field::Rational);
    // (Y, Z) / (Y) inside T is cyclic with annihilator (Y, Z)
    let u = vec![col(&t, &["Y"]), col(&t, &["Z"])];
    let v = vec![col(&t, &["Y"])];
    let sq = subquotient_presentation(&t, 1, &u, &v).unwrap();
    assert_eq!(sq.module.rank(), 1);
    assert_eq!(sq.generators, vec![col(&t, &["Z"])]);
    assert!(sq
        .module
        .annihilator()
        .unwrap()
        .equals(&Ideal::parse(&t, &["Y", "Z"]).unwrap())
        .unwrap());
}
