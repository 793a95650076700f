use crate::field::Coefficient;
use crate::homology::{validate_gw_constraints, ManifoldSpec, ProductKind, Side};
use crate::novikov::{Exponent, NovikovScalar, Valuation};
use crate::quantum::{Homogeneity, QhElement, QhError, QuantumHomology};
use crate::render::{format_element, format_scalar, format_series};

use super::random::{random_monomial, random_nonzero_scalar, random_scalar};
use super::{check_nondegeneracy, seeded_rng, Check, CheckBuilder, VerificationReport, Witness};

/// Runs the axiom checks in their fixed order. Deterministic in `(spec, seed, scalars)`.
pub fn run_axiom_suite<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    seed: u64,
    scalars: usize,
) -> VerificationReport {
    let qh = QuantumHomology::new(spec);
    let mut checks = validate_gw_constraints(spec);
    checks.push(super_commutativity(&qh));
    checks.push(lambda_linearity(&qh, seed, scalars));
    for (id, l1, l2, r1, r2) in ASSOCIATIVITY {
        checks.push(associativity(&qh, id, l1, l2, r1, r2));
    }
    checks.push(zero_class_term(&qh));
    checks.push(unit_laws(&qh));
    checks.push(delta_pi(&qh));
    checks.push(valuation_laws(&qh, seed, scalars));
    checks.push(grading(&qh));
    VerificationReport {
        spec: spec.name().to_string(),
        field: F::FIELD.to_string(),
        seed,
        checks,
    }
}

/// The axiom suite followed by the nondegeneracy checks.
pub fn run_full_suite<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    seed: u64,
    scalars: usize,
    floor: Option<Exponent>,
) -> Result<VerificationReport, QhError> {
    let mut report = run_axiom_suite(spec, seed, scalars);
    report
        .checks
        .extend(check_nondegeneracy(spec, floor, seed)?);
    Ok(report)
}

pub(crate) fn lattice_unit<F: Coefficient>(spec: &ManifoldSpec<F>) -> Exponent {
    let g = spec.exponent_group_generator();
    if g.is_zero() {
        Exponent::integer(1)
    } else {
        g
    }
}

fn name<F: Coefficient>(spec: &ManifoldSpec<F>, side: Side, i: usize) -> String {
    spec.class_name(side, i).to_string()
}

fn super_commutativity<F: Coefficient>(qh: &QuantumHomology<'_, F>) -> Check {
    let spec = qh.spec();
    let mut b = CheckBuilder::new("product.super_commutativity");
    for kind in [ProductKind::One, ProductKind::Three] {
        let side = kind.signature().0;
        for i in 0..spec.rank() {
            for j in 0..spec.rank() {
                let odd = spec.degree(side, i) % 2 == 1 && spec.degree(side, j) % 2 == 1;
                let lhs = qh.basis_product(kind, i, j);
                let rhs = qh
                    .basis_product(kind, j, i)
                    .scale(&NovikovScalar::constant(F::sign(odd)));
                b.case(*lhs == rhs, || Witness {
                    inputs: vec![
                        format!("∗{}", kind.index()),
                        name(spec, side, i),
                        name(spec, side, j),
                    ],
                    lhs: format_element(spec, lhs, None),
                    rhs: format_element(spec, &rhs, None),
                });
            }
        }
    }
    b.finish()
}

fn lambda_linearity<F: Coefficient>(
    qh: &QuantumHomology<'_, F>,
    seed: u64,
    scalars: usize,
) -> Check {
    let spec = qh.spec();
    let mut rng = seeded_rng(seed);
    let unit = lattice_unit(spec);
    let mut b = CheckBuilder::new("product.lambda_linearity");
    for _ in 0..scalars {
        let lam = random_scalar::<F, _>(&mut rng, unit);
        for kind in ProductKind::ALL {
            let (left, right, _) = kind.signature();
            for i in 0..spec.rank() {
                for j in 0..spec.rank() {
                    let x = QhElement::basis(left, i);
                    let y = QhElement::basis(right, j);
                    let base = qh.basis_product(kind, i, j).scale(&lam);
                    let left_scaled = qh.product(kind, &x.scale(&lam), &y).expect("sides match");
                    let right_scaled = qh.product(kind, &x, &y.scale(&lam)).expect("sides match");
                    let ok = base == left_scaled && base == right_scaled;
                    b.case(ok, || Witness {
                        inputs: vec![
                            format!("∗{}", kind.index()),
                            name(spec, left, i),
                            name(spec, right, j),
                            format!("λ = {}", format_scalar(&lam, None)),
                        ],
                        lhs: format_element(spec, &base, None),
                        rhs: if base != left_scaled {
                            format_element(spec, &left_scaled, None)
                        } else {
                            format_element(spec, &right_scaled, None)
                        },
                    });
                }
            }
        }
    }
    b.finish()
}

use ProductKind::{One, Three, Two};

/// `(a ∗l1 b) ∗l2 c = a ∗r1 (b ∗r2 c)`.
const ASSOCIATIVITY: [(&str, ProductKind, ProductKind, ProductKind, ProductKind); 4] = [
    ("product.associativity.11", One, One, One, One),
    ("product.associativity.12", One, Two, One, Two),
    ("product.associativity.23", Two, Two, Two, Three),
    ("product.associativity.33", Three, Three, Three, Three),
];

fn associativity<F: Coefficient>(
    qh: &QuantumHomology<'_, F>,
    id: &str,
    l1: ProductKind,
    l2: ProductKind,
    r1: ProductKind,
    r2: ProductKind,
) -> Check {
    let spec = qh.spec();
    let mut b = CheckBuilder::new(id);
    let (sa, sb, _) = l1.signature();
    let sc = l2.signature().1;
    for i in 0..spec.rank() {
        for j in 0..spec.rank() {
            for k in 0..spec.rank() {
                let a = QhElement::basis(sa, i);
                let bb = QhElement::basis(sb, j);
                let c = QhElement::basis(sc, k);
                let lhs = qh
                    .product(l2, &qh.product(l1, &a, &bb).expect("sides"), &c)
                    .expect("sides");
                let rhs = qh
                    .product(r1, &a, &qh.product(r2, &bb, &c).expect("sides"))
                    .expect("sides");
                b.case(lhs == rhs, || Witness {
                    inputs: vec![name(spec, sa, i), name(spec, sb, j), name(spec, sc, k)],
                    lhs: format_element(spec, &lhs, None),
                    rhs: format_element(spec, &rhs, None),
                });
            }
        }
    }
    b.finish()
}

fn zero_class_term<F: Coefficient>(qh: &QuantumHomology<'_, F>) -> Check {
    let spec = qh.spec();
    let mut b = CheckBuilder::new("product.zero_class_term");
    for kind in ProductKind::ALL {
        let (left, right, _) = kind.signature();
        for i in 0..spec.rank() {
            for j in 0..spec.rank() {
                let lhs = qh.basis_product(kind, i, j).classical_part();
                let rhs = spec.bullet_basis(kind, i, j);
                b.case(lhs == rhs, || Witness {
                    inputs: vec![
                        format!("{}", kind.index()),
                        name(spec, left, i),
                        name(spec, right, j),
                    ],
                    lhs: spec.format_class(&lhs),
                    rhs: spec.format_class(&rhs),
                });
            }
        }
    }
    b.finish()
}

fn unit_laws<F: Coefficient>(qh: &QuantumHomology<'_, F>) -> Check {
    let spec = qh.spec();
    let unit = qh.unit();
    let mut b = CheckBuilder::new("product.unit");
    for i in 0..spec.rank() {
        let a = QhElement::basis(Side::Absolute, i);
        let got = qh.product(Two, &a, &unit).expect("sides");
        b.case(got == a, || Witness {
            inputs: vec![format!("{} ∗₂ [unit]", name(spec, Side::Absolute, i))],
            lhs: format_element(spec, &got, None),
            rhs: format_element(spec, &a, None),
        });
        let x = QhElement::basis(Side::Relative, i);
        for (label, got) in [
            ("x ∗₃ [unit]", qh.product(Three, &x, &unit).expect("sides")),
            ("[unit] ∗₃ x", qh.product(Three, &unit, &x).expect("sides")),
        ] {
            b.case(got == x, || Witness {
                inputs: vec![label.to_string(), name(spec, Side::Relative, i)],
                lhs: format_element(spec, &got, None),
                rhs: format_element(spec, &x, None),
            });
        }
    }
    b.finish()
}

/// `Δ_l(a, b) = Δ₂(a ∗_l b, unit)` and `Π_l = ȷ ∘ Δ_l` on complementary basis pairs.
fn delta_pi<F: Coefficient>(qh: &QuantumHomology<'_, F>) -> Check {
    let spec = qh.spec();
    let unit = qh.unit();
    let mut b = CheckBuilder::new("pairing.delta_pi");
    for kind in [One, Two] {
        let (left, right, _) = kind.signature();
        for i in 0..spec.rank() {
            for j in 0..spec.rank() {
                if spec.degree(left, i) + spec.degree(right, j) != spec.dim() {
                    continue;
                }
                let inputs = || {
                    vec![
                        format!("Δ{}", kind.index()),
                        name(spec, left, i),
                        name(spec, right, j),
                    ]
                };
                let x = QhElement::basis(left, i);
                let y = QhElement::basis(right, j);
                let outcome = (|| -> Result<_, QhError> {
                    let delta = qh.delta_pairing(kind, &x, &y)?;
                    let via_unit = qh.delta_pairing(Two, &qh.product(kind, &x, &y)?, &unit)?;
                    let pi = qh.pi_pairing(kind, &x, &y)?;
                    Ok((delta, via_unit, pi))
                })();
                match outcome {
                    Ok((delta, via_unit, pi)) => {
                        b.case(delta == via_unit, || Witness {
                            inputs: inputs(),
                            lhs: format_series(&delta, None),
                            rhs: format_series(&via_unit, None),
                        });
                        let z0 = delta.coeff_at_zero().expect("exact series");
                        b.expect_eq(inputs, &pi, &z0);
                    }
                    Err(e) => b.error(inputs(), e.to_string()),
                }
            }
        }
    }
    b.finish()
}

fn valuation_laws<F: Coefficient>(qh: &QuantumHomology<'_, F>, seed: u64, count: usize) -> Check {
    let spec = qh.spec();
    let unit = lattice_unit(spec);
    let mut rng = seeded_rng(seed.wrapping_add(1));
    let mut b = CheckBuilder::new("valuation.laws");
    for _ in 0..count {
        let x = random_nonzero_scalar::<F, _>(&mut rng, unit);
        let y = random_nonzero_scalar::<F, _>(&mut rng, unit);
        let show = |x: &NovikovScalar<F>, y: &NovikovScalar<F>| {
            vec![format_scalar(x, None), format_scalar(y, None)]
        };
        b.expect_eq(
            || show(&x, &y),
            &(&x * &y).valuation(),
            &(x.valuation() + y.valuation()),
        );
        let sum = (&x + &y).valuation();
        let bound = x.valuation().max(y.valuation());
        b.case(sum <= bound, || Witness {
            inputs: show(&x, &y),
            lhs: format!("ν(λ+μ) = {sum}"),
            rhs: format!("max = {bound}"),
        });
        let m = random_monomial::<F, _>(&mut rng, unit);
        let inv = m.monomial_inverse().expect("monomials invert");
        b.expect_eq(
            || vec![format_scalar(&m, None)],
            &inv.valuation(),
            &-m.valuation(),
        );
        let ex = QhElement::term(Side::Absolute, 0, x.clone());
        let ey = QhElement::term(Side::Absolute, spec.rank() - 1, y.clone());
        let esum = (&ex + &ey).valuation();
        b.case(esum <= ex.valuation().max(ey.valuation()), || Witness {
            inputs: show(&x, &y),
            lhs: format!("ν(a+b) = {esum}"),
            rhs: format!("max = {}", ex.valuation().max(ey.valuation())),
        });
    }
    b.expect_eq(
        || vec!["ν(0)".into()],
        &NovikovScalar::<F>::zero().valuation(),
        &Valuation::NegInfinity,
    );
    b.finish()
}

fn grading<F: Coefficient>(qh: &QuantumHomology<'_, F>) -> Check {
    let spec = qh.spec();
    let mut b = CheckBuilder::new("product.grading");
    for kind in ProductKind::ALL {
        let (left, right, _) = kind.signature();
        for i in 0..spec.rank() {
            for j in 0..spec.rank() {
                let want =
                    spec.degree(left, i) as i64 + spec.degree(right, j) as i64 - spec.dim() as i64;
                let got = qh.basis_product(kind, i, j);
                let ok = matches!(got.homogeneity(spec), Homogeneity::Zero)
                    || got.homogeneity(spec) == Homogeneity::Degree(want);
                b.case(ok, || Witness {
                    inputs: vec![
                        format!("∗{}", kind.index()),
                        name(spec, left, i),
                        name(spec, right, j),
                    ],
                    lhs: format!("{:?}", got.homogeneity(spec)),
                    rhs: format!("Degree({want})"),
                });
            }
        }
    }
    b.finish()
}
