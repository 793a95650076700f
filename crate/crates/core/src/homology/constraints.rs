use super::gw::permutation_sign;
use super::{HomClass, ManifoldSpec, ProductKind, Side};
use crate::field::Coefficient;
use crate::verify::{Check, CheckBuilder};

/// Structural checks on the GW table and the classical data.
pub fn validate_gw_constraints<F: Coefficient>(spec: &ManifoldSpec<F>) -> Vec<Check> {
    vec![
        skew_symmetry(spec),
        fundamental_class(spec),
        jstar_kernel(spec),
        jstar_compatibility(spec),
        classical_jstar_compatibility(spec),
    ]
}

fn side_of(p: usize, slot: usize) -> Side {
    if slot < p {
        Side::Absolute
    } else {
        Side::Relative
    }
}

fn describe<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    class: &super::GammaClass,
    p: usize,
    args: [usize; 3],
) -> String {
    let names: Vec<_> = (0..3)
        .map(|k| spec.class_name(side_of(p, k), args[k]))
        .collect();
    format!("GW_{{{class},{p},3}}({})", names.join(", "))
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn block_preserving(p: usize) -> impl Iterator<Item = [usize; 3]> {
    PERMS
        .into_iter()
        .filter(move |perm| (0..3).all(|k| (perm[k] < p) == (k < p)))
}

fn skew_symmetry<F: Coefficient>(spec: &ManifoldSpec<F>) -> Check {
    let mut b = CheckBuilder::new("gw.skew_symmetry");
    for e in spec.gw_table() {
        let odd: Vec<bool> = (0..3)
            .map(|k| spec.degree(side_of(e.p, k), e.args[k]) % 2 == 1)
            .collect();
        for perm in block_preserving(e.p) {
            let permuted = [e.args[perm[0]], e.args[perm[1]], e.args[perm[2]]];
            let lhs = spec.gw_lookup(&e.class, e.p, permuted);
            let rhs = e.value.clone() * permutation_sign::<F>(&odd, &perm);
            b.expect_eq(
                || {
                    vec![
                        describe(spec, &e.class, e.p, e.args),
                        describe(spec, &e.class, e.p, permuted),
                    ]
                },
                &lhs,
                &rhs,
            );
        }
    }
    b.finish()
}

fn fundamental_class<F: Coefficient>(spec: &ManifoldSpec<F>) -> Check {
    let mut b = CheckBuilder::new("gw.fundamental_class");
    let top = spec.fundamental();
    for e in spec.gw_table() {
        if (e.p..3).any(|k| e.args[k] == top) {
            b.expect_eq(
                || vec![describe(spec, &e.class, e.p, e.args)],
                &e.value,
                &F::zero(),
            );
        }
    }
    b.finish()
}

fn jstar_kernel<F: Coefficient>(spec: &ManifoldSpec<F>) -> Check {
    let mut b = CheckBuilder::new("gw.jstar_kernel");
    for e in spec.gw_table() {
        if (0..e.p).any(|k| spec.jstar_basis(e.args[k]).is_zero()) {
            b.expect_eq(
                || vec![describe(spec, &e.class, e.p, e.args)],
                &e.value,
                &F::zero(),
            );
        }
    }
    b.finish()
}

/// `GW_{A,p,3}(a_1, …, a_p, c) = GW_{A,p−1,3}(a_1, …, a_{p−1}, j*(a_p), c)` on all basis tuples.
fn jstar_compatibility<F: Coefficient>(spec: &ManifoldSpec<F>) -> Check {
    let mut b = CheckBuilder::new("gw.jstar_compatibility");
    let r = spec.rank();
    for class in spec.gamma_classes() {
        for p in 1..=3 {
            for x in 0..r {
                for y in 0..r {
                    for z in 0..r {
                        let args = [x, y, z];
                        let total: i64 = (0..3)
                            .map(|k| spec.degree(side_of(p, k), args[k]) as i64)
                            .sum();
                        if total != 2 * spec.dim() as i64 - 2 * spec.c1(&class) {
                            continue;
                        }
                        let lhs = spec.gw_lookup(&class, p, args);
                        let rhs =
                            spec.jstar_basis(args[p - 1])
                                .terms()
                                .fold(F::zero(), |acc, (k, c)| {
                                    let mut moved = args;
                                    moved[p - 1] = k;
                                    acc + c.clone() * spec.gw_lookup(&class, p - 1, moved)
                                });
                        b.expect_eq(
                            || {
                                vec![
                                    describe(spec, &class, p, args),
                                    format!("j*({})", spec.class_name(Side::Absolute, args[p - 1])),
                                ]
                            },
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
    b.finish()
}

/// `a •₁ b = a •₂ j*(b)` on absolute basis pairs.
fn classical_jstar_compatibility<F: Coefficient>(spec: &ManifoldSpec<F>) -> Check {
    let mut b = CheckBuilder::new("classical.jstar_compatibility");
    for i in 0..spec.rank() {
        for j in 0..spec.rank() {
            let a = HomClass::basis(Side::Absolute, i);
            let lhs = spec.bullet_basis(ProductKind::One, i, j);
            let rhs = spec
                .classical_bullet(ProductKind::Two, &a, spec.jstar_basis(j))
                .expect("sides are fixed");
            b.case(lhs == rhs, || crate::verify::Witness {
                inputs: vec![
                    spec.class_name(Side::Absolute, i).to_string(),
                    spec.class_name(Side::Absolute, j).to_string(),
                ],
                lhs: spec.format_class(&lhs),
                rhs: spec.format_class(&rhs),
            });
        }
    }
    b.finish()
}
