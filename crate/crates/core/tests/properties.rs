use proptest::prelude::*;

use qhomology::homology::examples::{blowup_b4, blowup_dtstar, FIBER, FUNDAMENTAL, ZERO_SECTION};
use qhomology::homology::GammaClass;
use qhomology::quantum::Homogeneity;
use qhomology::{
    Coefficient, Exponent, HomClass, KgSeries, ManifoldSpec, NovikovScalar, ProductKind, QhElement,
    QuantumHomology, Rational, Side, Valuation,
};

type Q = Rational;

fn unit() -> Exponent {
    Exponent::new(1, 6)
}

fn series() -> impl Strategy<Value = KgSeries<Q>> {
    prop::collection::vec((-8i64..=4, -3i64..=3), 0..5).prop_map(|terms| {
        KgSeries::from_terms(terms.into_iter().map(|(k, c)| (unit() * k, Q::from_i64(c))))
    })
}

fn nonzero_series() -> impl Strategy<Value = KgSeries<Q>> {
    series().prop_filter("nonzero", |f| !f.is_zero())
}

fn scalar() -> impl Strategy<Value = NovikovScalar<Q>> {
    prop::collection::vec((-2i64..=2, series()), 0..3).prop_map(|parts| {
        parts
            .into_iter()
            .fold(NovikovScalar::zero(), |acc, (m, f)| {
                acc + NovikovScalar::from_series(f, m)
            })
    })
}

fn homogeneous_scalar() -> impl Strategy<Value = NovikovScalar<Q>> {
    (-2i64..=2, series()).prop_map(|(m, f)| NovikovScalar::from_series(f, m))
}

fn floor() -> impl Strategy<Value = Exponent> {
    (1i64..=40).prop_map(|k| -unit() * k)
}

const DT1_RANK: usize = 5;

fn element(rank: usize) -> impl Strategy<Value = Vec<(usize, NovikovScalar<Q>)>> {
    prop::collection::vec((0..rank, scalar()), 0..3)
}

fn on_side(terms: &[(usize, NovikovScalar<Q>)], side: Side) -> QhElement<Q> {
    let mut x = QhElement::zero(side);
    for (i, l) in terms {
        x.add_term(*i, l.clone());
    }
    x
}

/// (−1)^(number of inverted pairs of odd entries), counted directly.
fn koszul_sign(odd: &[bool], perm: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && odd[perm[i]] && odd[perm[j]] {
                sign = -sign;
            }
        }
    }
    sign
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn specs() -> Vec<ManifoldSpec<Q>> {
    let d = Exponent::new(1, 10);
    vec![
        blowup_b4(d).unwrap(),
        blowup_dtstar(1, d).unwrap(),
        blowup_dtstar(2, d).unwrap(),
    ]
}

proptest! {
    #[test]
    fn series_ring_laws(f in series(), g in series(), h in series()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &(-&f), KgSeries::zero());
        prop_assert_eq!(&f * &KgSeries::one(), f.clone());
    }

    #[test]
    fn inversion_contract(f in nonzero_series(), fl in floor()) {
        let g = f.invert(fl).unwrap();
        let residual = &(&f * &g.without_floor()) - &KgSeries::one();
        prop_assert!(residual.valuation() <= Valuation::Finite(fl));
        if f.len() == 1 {
            prop_assert!(g.is_exact());
            prop_assert_eq!(&f * &g, KgSeries::one());
        }
    }

    #[test]
    fn scalar_valuation_laws(x in scalar(), y in scalar()) {
        prop_assert_eq!((&x * &y).valuation(), x.valuation() + y.valuation());
        prop_assert!((&x + &y).valuation() <= x.valuation().max(y.valuation()));
        prop_assert_eq!((-&x).valuation(), x.valuation());
    }

    #[test]
    fn scalar_ring_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn degrees_add(l in homogeneous_scalar(), m in homogeneous_scalar(), k in 1u8..=3, i in 0usize..6, j in 0usize..6) {
        for spec in specs() {
            let qh = QuantumHomology::new(&spec);
            let kind = ProductKind::from_index(k).unwrap();
            let (ls, rs, _) = kind.signature();
            let (i, j) = (i % spec.rank(), j % spec.rank());
            let x = QhElement::term(ls, i, l.clone());
            let y = QhElement::term(rs, j, m.clone());
            let xy = qh.product(kind, &x, &y).unwrap();
            if let (Homogeneity::Degree(dx), Homogeneity::Degree(dy), Homogeneity::Degree(d)) =
                (x.homogeneity(&spec), y.homogeneity(&spec), xy.homogeneity(&spec))
            {
                prop_assert_eq!(d, dx + dy - spec.dim() as i64);
            } else {
                prop_assert!(xy.is_zero() || x.is_zero() || y.is_zero());
            }
        }
    }

    #[test]
    fn products_are_bilinear(
        l in scalar(),
        xs in prop::collection::vec(element(DT1_RANK), 3),
        ys in prop::collection::vec(element(DT1_RANK), 3),
        zs in prop::collection::vec(element(DT1_RANK), 3),
    ) {
        let spec = blowup_dtstar::<Q>(1, Exponent::new(1, 10)).unwrap();
        let qh = QuantumHomology::new(&spec);
        for (n, kind) in ProductKind::ALL.into_iter().enumerate() {
            let (ls, rs, _) = kind.signature();
            let x = on_side(&xs[n], ls);
            let (y, z) = (on_side(&ys[n], rs), on_side(&zs[n], rs));
            let lhs = qh.product(kind, &x.scale(&l), &(&y + &z)).unwrap();
            let rhs = &qh.product(kind, &x, &y).unwrap() + &qh.product(kind, &x, &z).unwrap();
            prop_assert_eq!(lhs, rhs.scale(&l));
        }
    }
}

#[test]
fn gw_invariants_are_graded_symmetric() {
    for spec in specs() {
        let classes = spec.gamma_classes();
        let perms3: Vec<Vec<usize>> = permutations(3);
        for p in 0..=3 {
            // block-preserving permutations only
            let block: Vec<&Vec<usize>> = perms3
                .iter()
                .filter(|s| s[..p].iter().all(|&k| k < p))
                .collect();
            for i in 0..spec.rank() {
                for j in 0..spec.rank() {
                    for k in 0..spec.rank() {
                        let args = [i, j, k];
                        let side = |slot: usize| {
                            if slot < p {
                                Side::Absolute
                            } else {
                                Side::Relative
                            }
                        };
                        let odd: Vec<bool> = (0..3)
                            .map(|s| spec.degree(side(s), args[s]) % 2 == 1)
                            .collect();
                        for sigma in &block {
                            let permuted = [args[sigma[0]], args[sigma[1]], args[sigma[2]]];
                            let sign = Q::from_i64(koszul_sign(&odd, sigma));
                            let base = spec.gw_zero_basis(p, &args);
                            assert_eq!(
                                spec.gw_zero_basis(p, &permuted),
                                &sign * &base,
                                "{} A=0 p={p} {args:?} {sigma:?}",
                                spec.name()
                            );
                            for a in &classes {
                                let base = spec.gw_lookup(a, p, args);
                                assert_eq!(
                                    spec.gw_lookup(a, p, permuted),
                                    &sign * &base,
                                    "{} A={a} p={p} {args:?} {sigma:?}",
                                    spec.name()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn zero_section_meets_fiber_once() {
    for g in 0..=3 {
        let spec = blowup_dtstar::<Q>(g, Exponent::new(1, 10)).unwrap();
        let s = HomClass::basis(
            Side::Absolute,
            spec.find(Side::Absolute, ZERO_SECTION).unwrap(),
        );
        let f = HomClass::basis(Side::Relative, spec.find(Side::Relative, FIBER).unwrap());
        let m = HomClass::basis(
            Side::Relative,
            spec.find(Side::Relative, FUNDAMENTAL).unwrap(),
        );
        assert_eq!(spec.gw_zero(1, &[s, f, m]).unwrap(), Q::one());
    }
}

#[test]
fn only_the_exceptional_class_contributes() {
    let spec = blowup_b4::<Q>(Exponent::new(1, 10)).unwrap();
    assert_eq!(spec.gamma_classes(), vec![GammaClass(vec![1])]);
}
