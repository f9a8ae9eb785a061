//! Worked examples: the Fano and non-Fano matroids, their sum, `M(K4)`, the
//! whirl `W^3`, uniform matroids and the graph `K4`.
//!
//! Every entry carries its collection and reference matrices, and
//! [`Entry::self_check`] confirms that each reference represents the
//! collection.

use crate::error::{Error, Result};
use crate::field::FieldMatrix;
use crate::graphs::Graph;
use crate::hereditary::HereditaryCollection;
use crate::matrix::SBMatrix;
use crate::represent::{self, Representation};
use crate::subset::{k_subsets, ElementSet};

/// Ground-set limit for `u <m> <n>`.
pub const UNIFORM_GROUND_LIMIT: usize = 12;

pub const NAMES: &[&str] = &["fano", "nonfano", "fano-sum", "mk4", "w3", "u <m> <n>", "k4"];

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub note: &'static str,
    pub collection: HereditaryCollection,
    /// Named superboolean reference matrices.
    pub sb: Vec<(String, SBMatrix)>,
    /// Named field reference matrices.
    pub gf: Vec<(String, FieldMatrix)>,
    pub graph: Option<Graph>,
}

impl Entry {
    /// Confirms every reference against the collection; the error names
    /// the first reference that disagrees.
    pub fn self_check(&self) -> std::result::Result<(), String> {
        for (name, a) in &self.sb {
            if represent::vector_hc(a) != self.collection {
                return Err(format!("{}: matrix {name} does not represent the collection", self.name));
            }
        }
        for (name, a) in &self.gf {
            if a.vector_matroid() != self.collection {
                return Err(format!("{}: matrix {name} does not represent the collection", self.name));
            }
        }
        if let Some(g) = &self.graph {
            if g.graphic_matroid() != self.collection {
                return Err(format!("{}: graph does not match the collection", self.name));
            }
        }
        Ok(())
    }
}

fn sb(text: &str) -> SBMatrix {
    text.parse().expect("catalog matrix")
}

fn gf(p: u32, rows: &[&[u32]]) -> FieldMatrix {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    FieldMatrix::from_rows(p, &rows, rows[0].len()).expect("catalog matrix")
}

/// Collection on `n` elements whose bases are all `k`-subsets except those
/// listed (1-based).
fn all_but(n: usize, k: usize, excluded: &[[usize; 3]]) -> HereditaryCollection {
    let excluded: Vec<ElementSet> = excluded.iter().map(|t| ElementSet::from_labels(t)).collect();
    let bases = k_subsets(n, k).filter(|b| !excluded.contains(b)).collect();
    HereditaryCollection::from_bases(n, bases).expect("catalog collection")
}

/// The seven lines of the Fano plane on the columns of `A7`.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 5],
    [1, 6, 7],
    [2, 3, 6],
    [2, 5, 7],
    [3, 4, 7],
    [4, 5, 6],
];

/// The 3 × 7 matrix whose columns are the nonzero vectors of `GF(2)^3`.
pub fn a7(p: u32) -> FieldMatrix {
    gf(
        p,
        &[
            &[1, 0, 0, 1, 1, 0, 1],
            &[0, 1, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 1],
        ],
    )
}

/// `A7` read as a boolean matrix.
pub fn a7_boolean() -> SBMatrix {
    sb("1 0 0 1 1 0 1; 0 1 0 1 0 1 1; 0 0 1 0 1 1 1")
}

/// The 5 × 7 boolean representation of the Fano matroid.
pub fn fano_boolean() -> SBMatrix {
    sb("1 0 0 1 1 0 1; 0 1 0 1 0 1 1; 0 0 1 0 1 1 1; 0 1 1 1 1 0 0; 1 0 1 1 0 1 0")
}

/// The 6 × 7 boolean representation of the non-Fano matroid.
pub fn non_fano_boolean() -> SBMatrix {
    fano_boolean()
        .vstack(&sb("1 1 1 1 0 0 1"))
        .expect("same column count")
}

pub fn fano() -> HereditaryCollection {
    all_but(7, 3, &FANO_LINES)
}

pub fn non_fano() -> HereditaryCollection {
    all_but(7, 3, &FANO_LINES[..6])
}

pub fn mk4_matrix() -> SBMatrix {
    sb("v v v 0 0 1; 1 0 0 1 1 1; 0 1 0 1 0 1; 0 0 1 0 1 1")
}

pub fn mk4() -> HereditaryCollection {
    all_but(6, 3, &[[1, 2, 4], [1, 3, 5], [2, 5, 6], [3, 4, 6]])
}

pub fn w3_matrix() -> SBMatrix {
    sb("v v v 0 0 1; 1 0 0 1 1 0; 0 1 0 1 0 1; 0 0 1 0 1 1")
}

/// Looks up an entry by name; `u` takes the two numbers `m n`.
pub fn lookup(name: &str, args: &[usize]) -> Result<Entry> {
    let unknown = || Error::UnknownExample(format!("`{name}` (known: {})", NAMES.join(", ")));
    if name != "u" && !args.is_empty() {
        return Err(Error::UnknownExample(format!("`{name}` takes no arguments")));
    }
    let entry = match name {
        "fano" => Entry {
            name: name.into(),
            note: "Fano matroid F7: A7 over GF(2) and a 5-row boolean representation",
            collection: fano(),
            sb: vec![("boolean".into(), fano_boolean())],
            gf: vec![("a7".into(), a7(2))],
            graph: None,
        },
        "nonfano" => Entry {
            name: name.into(),
            note: "non-Fano matroid F7-: A7 over GF(3) and a 6-row boolean representation",
            collection: non_fano(),
            sb: vec![("boolean".into(), non_fano_boolean())],
            gf: vec![("a7".into(), a7(3))],
            graph: None,
        },
        "fano-sum" => {
            let reps = [
                Representation::boolean(fano_boolean())?,
                Representation::boolean(non_fano_boolean())?,
            ];
            Entry {
                name: name.into(),
                note: "F7 + F7-, boolean representable but not representable over any field",
                collection: fano().direct_sum(&non_fano())?,
                sb: vec![("boolean".into(), represent::direct_sum_rep(&reps).into_matrix())],
                gf: vec![],
                graph: None,
            }
        }
        "mk4" => Entry {
            name: name.into(),
            note: "cycle matroid M(K4)",
            collection: mk4(),
            sb: vec![("matrix".into(), mk4_matrix())],
            gf: vec![],
            graph: None,
        },
        "w3" => Entry {
            name: name.into(),
            note: "whirl W3; the collection is derived from its matrix",
            collection: represent::vector_hc(&w3_matrix()),
            sb: vec![("matrix".into(), w3_matrix())],
            gf: vec![],
            graph: None,
        },
        "u" => {
            let &[m, n] = args else {
                return Err(Error::UnknownExample("`u` takes two numbers m n".into()));
            };
            if m > n {
                return Err(Error::UnknownExample(format!("`u {m} {n}` needs m <= n")));
            }
            if n > UNIFORM_GROUND_LIMIT {
                return Err(Error::GroundTooLarge {
                    found: n,
                    limit: UNIFORM_GROUND_LIMIT,
                });
            }
            let collection = HereditaryCollection::uniform(m, n);
            let matrix = if m == 2 && n >= 3 {
                represent::uniform_rank_two_matrix(n)
            } else {
                represent::reduce_rows(&represent::represent_from_bases(&collection)).into_matrix()
            };
            Entry {
                name: format!("u {m} {n}"),
                note: "uniform matroid U(m,n)",
                collection,
                sb: vec![("matrix".into(), matrix)],
                gf: vec![],
                graph: None,
            }
        }
        "k4" => {
            let g = Graph::complete(4);
            Entry {
                name: name.into(),
                note: "complete graph K4 with its incidence matrices",
                collection: g.graphic_matroid(),
                sb: vec![("incidence".into(), g.incidence_matrix())],
                gf: vec![("incidence".into(), g.incidence_gf2())],
                graph: Some(g),
            }
        }
        _ => return Err(unknown()),
    };
    Ok(entry)
}
