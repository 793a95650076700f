//! Built-in manifolds: the blow-up of the unit 4-ball and the blow-up of the
//! unit cotangent disk bundle of a genus-g surface, both at size δ.

use std::collections::BTreeMap;

use super::document::{
    AbsoluteBasisDecl, BulletDecl, GammaDecl, GwDecl, RelativeBasisDecl, SpecDocument,
};
use super::{ManifoldSpec, SpecError};
use crate::field::{BaseField, Coefficient};
use crate::novikov::Exponent;

pub const POINT: &str = "[pt]";
pub const EXCEPTIONAL: &str = "E";
pub const EXCEPTIONAL_DUAL: &str = "E^∨";
pub const FUNDAMENTAL: &str = "[M,∂M]";
pub const ZERO_SECTION: &str = "[Σ]";
pub const FIBER: &str = "[F]";

pub fn a(i: u32) -> String {
    format!("[a{i}]")
}

pub fn b(i: u32) -> String {
    format!("[b{i}]")
}

pub fn a_dual(i: u32) -> String {
    format!("[a{i}]^∨")
}

pub fn b_dual(i: u32) -> String {
    format!("[b{i}]^∨")
}

fn abs(name: &str, degree: u32) -> AbsoluteBasisDecl {
    AbsoluteBasisDecl {
        name: name.to_string(),
        degree,
    }
}

fn rel(name: &str, degree: u32, dual_of: &str) -> RelativeBasisDecl {
    RelativeBasisDecl {
        name: name.to_string(),
        degree,
        dual_of: dual_of.to_string(),
    }
}

fn entry(left: &str, right: &str, result: &[(&str, i64)]) -> BulletDecl {
    BulletDecl {
        left: left.to_string(),
        right: right.to_string(),
        result: result
            .iter()
            .map(|(n, c)| (n.to_string(), c.to_string()))
            .collect(),
    }
}

fn gw(p: usize, args: [&str; 3], value: i64) -> GwDecl {
    GwDecl {
        class: vec![1],
        p,
        args: args.iter().map(|s| s.to_string()).collect(),
        value: value.to_string(),
    }
}

/// The nonzero invariants in the class E, shared by both examples.
fn exceptional_rows() -> Vec<GwDecl> {
    vec![
        gw(0, [EXCEPTIONAL_DUAL, EXCEPTIONAL_DUAL, EXCEPTIONAL_DUAL], 1),
        gw(1, [EXCEPTIONAL, EXCEPTIONAL_DUAL, EXCEPTIONAL_DUAL], -1),
        gw(2, [EXCEPTIONAL, EXCEPTIONAL, EXCEPTIONAL_DUAL], 1),
        gw(3, [EXCEPTIONAL, EXCEPTIONAL, EXCEPTIONAL], -1),
    ]
}

fn exceptional_gamma(delta: Exponent) -> Vec<GammaDecl> {
    vec![GammaDecl {
        name: EXCEPTIONAL.to_string(),
        c1: 1,
        omega: delta.to_string(),
    }]
}

fn check_delta(delta: Exponent) -> Result<(), SpecError> {
    if !delta.is_positive() {
        return Err(SpecError::validation(
            "params",
            format!("δ must be positive, got {delta}"),
        ));
    }
    Ok(())
}

pub fn blowup_b4_document(delta: Exponent, field: BaseField) -> Result<SpecDocument, SpecError> {
    check_delta(delta)?;
    let jstar = BTreeMap::from([(
        EXCEPTIONAL.to_string(),
        BTreeMap::from([(EXCEPTIONAL_DUAL.to_string(), "-1".to_string())]),
    )]);
    Ok(SpecDocument {
        name: "blowup_b4".to_string(),
        dim: 4,
        field,
        absolute_basis: vec![abs(POINT, 0), abs(EXCEPTIONAL, 2)],
        relative_basis: vec![
            rel(EXCEPTIONAL_DUAL, 2, EXCEPTIONAL),
            rel(FUNDAMENTAL, 4, POINT),
        ],
        bullet1: vec![entry(EXCEPTIONAL, EXCEPTIONAL, &[(POINT, -1)])],
        bullet2: vec![entry(EXCEPTIONAL, EXCEPTIONAL_DUAL, &[(POINT, 1)])],
        bullet3: vec![entry(EXCEPTIONAL_DUAL, EXCEPTIONAL_DUAL, &[])],
        jstar,
        gamma_generators: exceptional_gamma(delta),
        gw_table: exceptional_rows(),
        bullet1_nondegenerate: false,
    })
}

pub fn blowup_dtstar_document(
    genus: u32,
    delta: Exponent,
    field: BaseField,
) -> Result<SpecDocument, SpecError> {
    check_delta(delta)?;
    let g = genus;
    let euler = 2 - 2 * i64::from(g);
    let (a_names, b_names): (Vec<_>, Vec<_>) = (1..=g).map(|i| (a(i), b(i))).unzip();
    let (ad_names, bd_names): (Vec<_>, Vec<_>) = (1..=g).map(|i| (a_dual(i), b_dual(i))).unzip();

    let mut absolute_basis = vec![abs(POINT, 0)];
    absolute_basis.extend(a_names.iter().map(|n| abs(n, 1)));
    absolute_basis.extend(b_names.iter().map(|n| abs(n, 1)));
    absolute_basis.push(abs(ZERO_SECTION, 2));
    absolute_basis.push(abs(EXCEPTIONAL, 2));

    let mut relative_basis = vec![
        rel(FIBER, 2, ZERO_SECTION),
        rel(EXCEPTIONAL_DUAL, 2, EXCEPTIONAL),
    ];
    relative_basis.extend(ad_names.iter().zip(&a_names).map(|(d, n)| rel(d, 3, n)));
    relative_basis.extend(bd_names.iter().zip(&b_names).map(|(d, n)| rel(d, 3, n)));
    relative_basis.push(rel(FUNDAMENTAL, 4, POINT));

    let bullet1 = vec![
        entry(EXCEPTIONAL, EXCEPTIONAL, &[(POINT, -1)]),
        entry(ZERO_SECTION, ZERO_SECTION, &[(POINT, euler)]),
        entry(ZERO_SECTION, EXCEPTIONAL, &[]),
    ];

    let mut bullet2 = vec![
        entry(EXCEPTIONAL, EXCEPTIONAL_DUAL, &[(POINT, 1)]),
        entry(EXCEPTIONAL, FIBER, &[]),
        // forced by Kronecker duality [F] = [Σ]^∨
        entry(ZERO_SECTION, FIBER, &[(POINT, 1)]),
        entry(ZERO_SECTION, EXCEPTIONAL_DUAL, &[]),
    ];
    for i in 0..g as usize {
        for j in 0..g as usize {
            let d = i64::from(i == j);
            bullet2.push(entry(&a_names[i], &ad_names[j], &[(POINT, d)]));
            bullet2.push(entry(&b_names[i], &bd_names[j], &[(POINT, d)]));
            bullet2.push(entry(&a_names[i], &bd_names[j], &[]));
            bullet2.push(entry(&b_names[i], &ad_names[j], &[]));
        }
        // [Σ] •₂ [a_i]^∨ = [b_i]; the second is forced by skew-symmetry of GW_{0,1,3}
        bullet2.push(entry(ZERO_SECTION, &ad_names[i], &[(&b_names[i], 1)]));
        bullet2.push(entry(ZERO_SECTION, &bd_names[i], &[(&a_names[i], -1)]));
        bullet2.push(entry(EXCEPTIONAL, &ad_names[i], &[]));
        bullet2.push(entry(EXCEPTIONAL, &bd_names[i], &[]));
    }

    let mut bullet3 = vec![
        entry(FIBER, FIBER, &[]),
        entry(FIBER, EXCEPTIONAL_DUAL, &[]),
        entry(EXCEPTIONAL_DUAL, EXCEPTIONAL_DUAL, &[]),
    ];
    for i in 0..g as usize {
        for two in [FIBER, EXCEPTIONAL_DUAL] {
            bullet3.push(entry(two, &ad_names[i], &[]));
            bullet3.push(entry(two, &bd_names[i], &[]));
        }
        for j in 0..g as usize {
            // ⟨[Σ], [a_i]^∨ •₃ [b_j]^∨⟩ = ([Σ] •₂ [a_i]^∨) •₂ [b_j]^∨ = δ_ij
            if i == j {
                bullet3.push(entry(&ad_names[i], &bd_names[j], &[(FIBER, 1)]));
            } else {
                bullet3.push(entry(&ad_names[i], &bd_names[j], &[]));
            }
            if i <= j {
                bullet3.push(entry(&ad_names[i], &ad_names[j], &[]));
                bullet3.push(entry(&bd_names[i], &bd_names[j], &[]));
            }
        }
    }

    let mut jstar = BTreeMap::from([(
        EXCEPTIONAL.to_string(),
        BTreeMap::from([(EXCEPTIONAL_DUAL.to_string(), "-1".to_string())]),
    )]);
    if euler != 0 {
        jstar.insert(
            ZERO_SECTION.to_string(),
            BTreeMap::from([(FIBER.to_string(), euler.to_string())]),
        );
    }

    Ok(SpecDocument {
        name: format!("blowup_dtstar_g{g}"),
        dim: 4,
        field,
        absolute_basis,
        relative_basis,
        bullet1,
        bullet2,
        bullet3,
        jstar,
        gamma_generators: exceptional_gamma(delta),
        gw_table: exceptional_rows(),
        bullet1_nondegenerate: false,
    })
}

pub fn blowup_b4<F: Coefficient>(delta: Exponent) -> Result<ManifoldSpec<F>, SpecError> {
    ManifoldSpec::from_document(&blowup_b4_document(delta, F::FIELD)?)
}

pub fn blowup_dtstar<F: Coefficient>(
    genus: u32,
    delta: Exponent,
) -> Result<ManifoldSpec<F>, SpecError> {
    ManifoldSpec::from_document(&blowup_dtstar_document(genus, delta, F::FIELD)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};
    use crate::homology::{GammaClass, HomClass, ProductKind, Side};

    fn delta() -> Exponent {
        Exponent::new(1, 10)
    }

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn b4_bases() {
        let spec = blowup_b4::<Rational>(delta()).unwrap();
        let names = |side| {
            spec.basis(side)
                .iter()
                .map(|c| c.name.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(Side::Absolute), vec![POINT, EXCEPTIONAL]);
        assert_eq!(names(Side::Relative), vec![EXCEPTIONAL_DUAL, FUNDAMENTAL]);
        assert!(spec.warnings().is_empty(), "{:?}", spec.warnings());
    }

    #[test]
    fn b4_half_period_group() {
        let spec = blowup_b4::<Rational>(delta()).unwrap();
        assert_eq!(spec.exponent_group_generator(), Exponent::new(1, 20));
    }

    #[test]
    fn b4_table_values() {
        let spec = blowup_b4::<Rational>(delta()).unwrap();
        let e = spec.find(Side::Absolute, EXCEPTIONAL).unwrap();
        let ed = spec.find(Side::Relative, EXCEPTIONAL_DUAL).unwrap();
        let class = GammaClass(vec![1]);
        assert_eq!(spec.gw_lookup(&class, 0, [ed, ed, ed]), q(1));
        assert_eq!(spec.gw_lookup(&class, 1, [e, ed, ed]), q(-1));
        assert_eq!(spec.gw_lookup(&class, 3, [e, e, e]), q(-1));
        assert_eq!(spec.gw_lookup(&GammaClass(vec![2]), 3, [e, e, e]), q(0));
        let pt = HomClass::basis(Side::Absolute, spec.point());
        let ee = spec
            .classical_bullet(
                ProductKind::One,
                &HomClass::basis(Side::Absolute, e),
                &HomClass::basis(Side::Absolute, e),
            )
            .unwrap();
        assert_eq!(ee, pt.scale(&q(-1)));
    }

    #[test]
    fn dtstar_shapes() {
        let g0 = blowup_dtstar::<Rational>(0, delta()).unwrap();
        assert_eq!(g0.rank(), 3);
        let g2 = blowup_dtstar::<Rational>(2, delta()).unwrap();
        let odd = |side| g2.basis(side).iter().filter(|c| c.degree % 2 == 1).count();
        assert_eq!(odd(Side::Absolute), 4);
        assert!(
            g2.basis(Side::Relative)
                .iter()
                .filter(|c| c.degree == 3)
                .count()
                == 4
        );
        assert!(g2.warnings().is_empty(), "{:?}", g2.warnings());
    }

    #[test]
    fn dtstar_sigma_squared() {
        for g in 0..4 {
            let spec = blowup_dtstar::<Rational>(g, delta()).unwrap();
            let s = HomClass::basis(
                Side::Absolute,
                spec.find(Side::Absolute, ZERO_SECTION).unwrap(),
            );
            let ss = spec.classical_bullet(ProductKind::One, &s, &s).unwrap();
            assert_eq!(ss.coeff(spec.point()), q(2 - 2 * g as i64));
        }
    }

    #[test]
    fn documents_round_trip() {
        for doc in [
            blowup_b4_document(delta(), BaseField::Rationals).unwrap(),
            blowup_dtstar_document(2, delta(), BaseField::Rationals).unwrap(),
        ] {
            let spec = ManifoldSpec::<Rational>::from_document(&doc).unwrap();
            let text = spec.to_json();
            let again = ManifoldSpec::<Rational>::from_json(&text).unwrap();
            assert_eq!(again.to_json(), text);
        }
    }

    #[test]
    fn z2_loads() {
        let spec = blowup_dtstar::<Gf2>(1, delta()).unwrap();
        assert!(spec.warnings().is_empty());
        assert!(blowup_b4::<Gf2>(delta()).is_ok());
    }

    #[test]
    fn rejects_non_positive_delta() {
        assert!(blowup_b4_document(Exponent::ZERO, BaseField::Rationals).is_err());
    }
}
