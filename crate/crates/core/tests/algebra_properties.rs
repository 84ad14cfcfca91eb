use lierad_core::catalog;
use lierad_core::format::{parse_algebra, render_algebra};
use lierad_core::linalg::{is_zero_vector, ratio, zero_vector, Rational, Vector};
use lierad_core::oracle::{naive_series, random_algebra, random_ideal, verify_theorems};
use lierad_core::series::{self, SeriesKind};
use lierad_core::{LieAlgebra, Subspace};
use proptest::prelude::*;

/// Half catalog entries, half random algebras of dimension at most 4.
fn algebra() -> impl Strategy<Value = LieAlgebra> {
    let names = catalog::list();
    prop_oneof![
        (0..names.len()).prop_map(move |i| catalog::get(names[i]).unwrap().algebra),
        any::<u64>().prop_map(random_algebra),
    ]
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn with_vectors(count: usize) -> impl Strategy<Value = (LieAlgebra, Vec<Vector>)> {
    algebra().prop_flat_map(move |l| {
        let n = l.dim();
        (
            Just(l),
            proptest::collection::vec(proptest::collection::vec(small_rational(), n), count),
        )
    })
}

fn add(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn scale(s: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|a| s * a).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_antisymmetric_and_jacobi((l, v) in with_vectors(3), s in small_rational()) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let xy = l.bracket(x, y).unwrap();
        let yx = l.bracket(y, x).unwrap();
        prop_assert_eq!(add(&xy, &yx), zero_vector(l.dim()));
        let left = l.bracket(&add(&scale(&s, x), z), y).unwrap();
        let right = add(&scale(&s, &xy), &l.bracket(z, y).unwrap());
        prop_assert_eq!(left, right);
        prop_assert!(is_zero_vector(&l.jacobi_sum(x, y, z)));
    }

    #[test]
    fn killing_form_is_symmetric_and_invariant((l, v) in with_vectors(3)) {
        let k = l.killing();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(k.form(x, y), k.form(y, x));
        let by_trace = l.adjoint(x).unwrap().mul(&l.adjoint(y).unwrap()).unwrap().trace().unwrap();
        prop_assert_eq!(k.form(x, y), by_trace);
        let xy = l.bracket(x, y).unwrap();
        let yz = l.bracket(y, z).unwrap();
        prop_assert_eq!(k.form(&xy, z), k.form(x, &yz));
    }

    #[test]
    fn projection_is_a_homomorphism((l, v) in with_vectors(2), seed in any::<u64>()) {
        let i = random_ideal(&l, seed);
        let (q, proj) = l.quotient(&i).unwrap();
        let (x, y) = (&v[0], &v[1]);
        let down = proj.apply(&l.bracket(x, y).unwrap());
        let across = q.bracket(&proj.apply(x), &proj.apply(y)).unwrap();
        prop_assert_eq!(down, across);
        prop_assert_eq!(q.dim() + i.dim(), l.dim());
    }

    #[test]
    fn ideal_closure_is_a_minimal_ideal((l, v) in with_vectors(2)) {
        let n = l.dim();
        let closure = l.ideal_closure(&v).unwrap();
        prop_assert!(l.is_ideal(&closure));
        for g in &v {
            prop_assert!(closure.contains(g));
        }
        let rows: Vec<Vector> = closure.basis_vectors().map(<[Rational]>::to_vec).collect();
        for drop in 0..rows.len() {
            let rest: Vec<&Vector> = rows.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, r)| r).collect();
            let smaller = Subspace::span(&rest, n).unwrap();
            let still = l.is_ideal(&smaller) && v.iter().all(|g| smaller.contains(g));
            prop_assert!(!still, "dropping row {} leaves an ideal holding the generators", drop);
        }
    }

    #[test]
    fn killing_orthogonal_of_an_ideal_is_an_ideal(l in algebra(), seed in any::<u64>()) {
        let i = random_ideal(&l, seed);
        prop_assert!(l.is_ideal(&l.killing_orthogonal(&i).unwrap()));
    }

    #[test]
    fn series_are_monotone_chains_of_ideals(l in algebra()) {
        for kind in SeriesKind::ALL {
            let s = series::series(&l, kind);
            for w in s.terms.windows(2) {
                let (a, b) = (&w[0], &w[1]);
                prop_assert!(l.is_ideal(a));
                let ordered = match kind {
                    SeriesKind::UpperCentral => a.leq(b).unwrap() && a.dim() < b.dim(),
                    _ => b.leq(a).unwrap() && b.dim() < a.dim(),
                };
                prop_assert!(ordered, "{} series not strictly monotone", kind);
            }
        }
    }

    #[test]
    fn naive_series_match(l in algebra()) {
        for kind in SeriesKind::ALL {
            prop_assert_eq!(naive_series(&l, kind), series::series(&l, kind));
        }
    }

    #[test]
    fn structural_checks_hold(l in algebra(), seed in any::<u64>()) {
        let r = verify_theorems(&l, 12, seed);
        prop_assert!(r.all_hold(), "{:?}", r.violations());
        prop_assert_eq!(&r, &verify_theorems(&l, 12, seed));
    }

    #[test]
    fn file_format_round_trips(l in algebra()) {
        let back = parse_algebra(&render_algebra(&l)).unwrap();
        prop_assert_eq!(back.constants(), l.constants());
        prop_assert_eq!(back.labels(), l.labels());
    }
}

/// An algebra can be solvable without its Killing-orthogonal complement being
/// nilpotent: here `K ≡ 0`, so `L^⊥ = L`, which is not nilpotent.
#[test]
fn orthogonal_complement_need_not_be_nilpotent() {
    let l = catalog::get("s5_kzero").unwrap().algebra;
    let k = l.killing();
    assert!(k.is_zero());
    let perp = k.orthogonal(&l.full());
    assert!(perp.is_full());
    assert!(series::is_solvable(&l));
    assert!(!series::is_nilpotent(&l));
}

#[test]
fn nilradicals_lie_in_the_orthogonal_complement() {
    for e in catalog::all() {
        if let Some(n) = &e.known_nilradical {
            let perp = e.algebra.killing_orthogonal(&e.algebra.full()).unwrap();
            assert!(n.value.leq(&perp).unwrap(), "{}", e.name);
        }
    }
}
