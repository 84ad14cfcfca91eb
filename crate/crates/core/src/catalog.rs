//! Named low-dimensional Lie algebras with hand-checked properties.
//!
//! Algebras that are usually presented over C are stored in a split form with
//! rational structure constants (sl2 in the `h, e, f` basis).

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::error::Error;
use crate::linalg::{int_vector, Vector};
use crate::subspace::Subspace;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Stated outright in the literature this example is taken from.
    Published,
    /// Worked out by hand from the brackets.
    HandDerived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fact<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn derived<T>(value: T) -> Fact<T> {
    Fact {
        value,
        provenance: Provenance::HandDerived,
    }
}

fn published<T>(value: T) -> Fact<T> {
    Fact {
        value,
        provenance: Provenance::Published,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Known {
    pub solvable: Fact<bool>,
    pub nilpotent: Fact<bool>,
    pub perfect: Fact<bool>,
    pub semisimple: Fact<bool>,
    pub abelian: Fact<bool>,
    pub perfect_radical_dim: Fact<usize>,
    pub near_perfect_radical_dim: Fact<usize>,
    pub radical_dim: Fact<usize>,
    pub center_dim: Fact<usize>,
    pub smallest_upper_bounded_dim: Fact<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: LieAlgebra,
    pub known: Known,
    /// Largest nilpotent ideal, when known from outside the library.
    pub known_nilradical: Option<Fact<Subspace>>,
}

const NAMES: [&str; 10] = [
    "abelian1",
    "abelian2",
    "aff1",
    "gl2",
    "heis3",
    "n4",
    "s3_2",
    "s5_kzero",
    "sl2",
    "sl2_plus_s3_2",
];

/// Sorted list of entry names.
pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

pub fn get(name: &str) -> Result<CatalogEntry, Error> {
    let entry = match name {
        "abelian1" => abelian(1),
        "abelian2" => abelian(2),
        "aff1" => aff1(),
        "gl2" => gl2(),
        "heis3" => heis3(),
        "n4" => n4(),
        "s3_2" => s3_2(),
        "s5_kzero" => s5_kzero(),
        "sl2" => sl2(),
        "sl2_plus_s3_2" => sl2_plus_s3_2(),
        _ => {
            return Err(Error::UnknownAlgebra {
                name: name.to_string(),
                available: NAMES.iter().map(|s| s.to_string()).collect(),
            })
        }
    };
    Ok(entry)
}

pub fn all() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| get(n).expect("listed names resolve"))
        .collect()
}

fn build(dim: usize, labels: &[&str], brackets: &[(usize, usize, &[i64])]) -> LieAlgebra {
    let mut b = StructureConstants::builder(dim);
    for &(i, j, image) in brackets {
        b.bracket_ints(i, j, image)
            .expect("catalog brackets are well-formed");
    }
    let labels = labels.iter().map(|s| s.to_string()).collect();
    LieAlgebra::validated(b.build(), labels).expect("catalog algebras satisfy Jacobi")
}

fn span(rows: &[&[i64]], n: usize) -> Subspace {
    let rows: Vec<Vector> = rows.iter().map(|r| int_vector(r)).collect();
    Subspace::span(&rows, n).expect("fixture vectors have ambient length")
}

fn known(flags: [bool; 5], dims: [usize; 5]) -> Known {
    let [solvable, nilpotent, perfect, semisimple, abelian] = flags;
    let [p, np, r, z, u] = dims;
    Known {
        solvable: derived(solvable),
        nilpotent: derived(nilpotent),
        perfect: derived(perfect),
        semisimple: derived(semisimple),
        abelian: derived(abelian),
        perfect_radical_dim: derived(p),
        near_perfect_radical_dim: derived(np),
        radical_dim: derived(r),
        center_dim: derived(z),
        smallest_upper_bounded_dim: derived(u),
    }
}

// Flag order: solvable, nilpotent, perfect, semisimple, abelian.
// Dimension order: P, NP, R, Z, U_m(0).

fn abelian(n: usize) -> CatalogEntry {
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    CatalogEntry {
        name: if n == 1 { "abelian1" } else { "abelian2" },
        description: "abelian algebra",
        algebra: build(n, &labels, &[]),
        known: known([true, true, false, false, true], [0, 0, n, n, n]),
        known_nilradical: Some(derived(Subspace::full(n))),
    }
}

fn aff1() -> CatalogEntry {
    CatalogEntry {
        name: "aff1",
        description: "affine line algebra, [e1,e2] = e2",
        algebra: build(2, &["e1", "e2"], &[(0, 1, &[0, 1])]),
        known: known([true, false, false, false, false], [0, 1, 2, 0, 0]),
        known_nilradical: Some(derived(span(&[&[0, 1]], 2))),
    }
}

fn heis3() -> CatalogEntry {
    CatalogEntry {
        name: "heis3",
        description: "three-dimensional Heisenberg algebra, [e1,e2] = e3",
        algebra: build(3, &["e1", "e2", "e3"], &[(0, 1, &[0, 0, 1])]),
        known: known([true, true, false, false, false], [0, 0, 3, 1, 3]),
        known_nilradical: Some(derived(Subspace::full(3))),
    }
}

fn n4() -> CatalogEntry {
    CatalogEntry {
        name: "n4",
        description: "four-dimensional filiform algebra, [e1,e2] = e3, [e1,e3] = e4",
        algebra: build(
            4,
            &["e1", "e2", "e3", "e4"],
            &[(0, 1, &[0, 0, 1, 0]), (0, 2, &[0, 0, 0, 1])],
        ),
        known: known([true, true, false, false, false], [0, 0, 4, 1, 4]),
        known_nilradical: Some(derived(Subspace::full(4))),
    }
}

fn s3_2_algebra() -> LieAlgebra {
    build(
        3,
        &["x", "y", "z"],
        &[(2, 0, &[1, 0, 0]), (2, 1, &[1, 1, 0])],
    )
}

fn s3_2() -> CatalogEntry {
    let mut k = known([true, false, false, false, false], [0, 2, 3, 0, 0]);
    k.solvable = published(true);
    CatalogEntry {
        name: "s3_2",
        description: "solvable algebra s_{3,2}: [z,x] = x, [z,y] = x + y, [x,y] = 0",
        algebra: s3_2_algebra(),
        known: k,
        known_nilradical: Some(derived(span(&[&[1, 0, 0], &[0, 1, 0]], 3))),
    }
}

/// Solvable, not nilpotent, and its Killing form vanishes identically:
/// `ad t` acts on the abelian ideal by `diag(1, 1) ⊕ [[0, 1], [-1, 0]]`,
/// whose square has trace zero.
fn s5_kzero() -> CatalogEntry {
    CatalogEntry {
        name: "s5_kzero",
        description: "solvable, non-nilpotent algebra with identically zero Killing form",
        algebra: build(
            5,
            &["a1", "a2", "a3", "a4", "t"],
            &[
                (4, 0, &[1, 0, 0, 0, 0]),
                (4, 1, &[0, 1, 0, 0, 0]),
                (4, 2, &[0, 0, 0, -1, 0]),
                (4, 3, &[0, 0, 1, 0, 0]),
            ],
        ),
        known: known([true, false, false, false, false], [0, 4, 5, 0, 0]),
        known_nilradical: Some(derived(span(
            &[
                &[1, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0],
                &[0, 0, 1, 0, 0],
                &[0, 0, 0, 1, 0],
            ],
            5,
        ))),
    }
}

fn sl2_brackets() -> Vec<(usize, usize, &'static [i64])> {
    vec![(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])]
}

fn sl2() -> CatalogEntry {
    let mut k = known([false, false, true, true, false], [3, 3, 0, 0, 0]);
    k.perfect = published(true);
    CatalogEntry {
        name: "sl2",
        description: "split sl(2): [h,e] = 2e, [h,f] = -2f, [e,f] = h",
        algebra: build(3, &["h", "e", "f"], &sl2_brackets()),
        known: k,
        known_nilradical: Some(derived(Subspace::zero(3))),
    }
}

fn gl2() -> CatalogEntry {
    let brackets: Vec<(usize, usize, &[i64])> = vec![
        (0, 1, &[0, 2, 0, 0]),
        (0, 2, &[0, 0, -2, 0]),
        (1, 2, &[1, 0, 0, 0]),
    ];
    CatalogEntry {
        name: "gl2",
        description: "gl(2) = sl(2) plus a central element c",
        algebra: build(4, &["h", "e", "f", "c"], &brackets),
        known: known([false, false, false, false, false], [3, 3, 1, 1, 1]),
        known_nilradical: Some(derived(span(&[&[0, 0, 0, 1]], 4))),
    }
}

fn sl2_plus_s3_2() -> CatalogEntry {
    let brackets: Vec<(usize, usize, &[i64])> = vec![
        (0, 1, &[0, 2, 0, 0, 0, 0]),
        (0, 2, &[0, 0, -2, 0, 0, 0]),
        (1, 2, &[1, 0, 0, 0, 0, 0]),
        (5, 3, &[0, 0, 0, 1, 0, 0]),
        (5, 4, &[0, 0, 0, 1, 1, 0]),
    ];
    CatalogEntry {
        name: "sl2_plus_s3_2",
        description: "direct sum of split sl(2) (h, e, f) and s_{3,2} (x, y, z)",
        algebra: build(6, &["h", "e", "f", "x", "y", "z"], &brackets),
        known: known([false, false, false, false, false], [3, 5, 3, 0, 0]),
        known_nilradical: Some(derived(span(
            &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]],
            6,
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn get_s3_2_has_published_brackets() {
        let e = get("s3_2").unwrap();
        let l = &e.algebra;
        let (x, y, z) = (
            int_vector(&[1, 0, 0]),
            int_vector(&[0, 1, 0]),
            int_vector(&[0, 0, 1]),
        );
        assert_eq!(l.bracket(&z, &x).unwrap(), x);
        assert_eq!(l.bracket(&z, &y).unwrap(), int_vector(&[1, 1, 0]));
        assert_eq!(l.bracket(&x, &y).unwrap(), int_vector(&[0, 0, 0]));
        assert_eq!(e.known.solvable.provenance, Provenance::Published);
    }

    #[test]
    fn get_heis3_and_sl2() {
        let h = get("heis3").unwrap();
        assert_eq!(h.known_nilradical.unwrap().value, Subspace::full(3));
        let s = get("sl2").unwrap();
        assert!(s.known.semisimple.value);
        assert!(s.algebra.killing().is_nondegenerate());
    }

    #[test]
    fn unknown_name_lists_choices() {
        match get("nosuch") {
            Err(Error::UnknownAlgebra { name, available }) => {
                assert_eq!(name, "nosuch");
                assert!(available.contains(&"s3_2".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn list_is_sorted_and_complete() {
        let names = list();
        assert!(names.len() >= 7);
        assert!(names.windows(2).all(|w| w[0] < w[1]));
        for required in [
            "abelian1",
            "abelian2",
            "aff1",
            "heis3",
            "s3_2",
            "sl2",
            "sl2_plus_s3_2",
        ] {
            assert!(names.contains(&required), "{required} missing");
        }
    }

    #[test]
    fn every_entry_validates_and_names_match() {
        for e in all() {
            assert!(e.algebra.validate().is_valid(), "{}", e.name);
            assert_eq!(get(e.name).unwrap().name, e.name);
        }
    }
}
