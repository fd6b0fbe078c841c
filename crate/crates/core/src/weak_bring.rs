//! Weak B-ring axioms checked over explicit finite operation tables.
//!
//! A weak B-ring is a 6-tuple (X, \/, 0, ., 1, ^) satisfying eleven axioms:
//! (X, \/, 0) a commutative monoid, (X, ., 1) a monoid, 0 absorbing for the
//! product, the product distributive over \/ on both sides, and the unary
//! operation an involution commuting with itself under both operations.
//! The checker consumes raw tables and assumes nothing, so it can refute
//! non-examples as well as confirm the twisted product structure on A x A.

use crate::boolalg::{BoolAlgebra, Element};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("table entry {entry} out of range for carrier size {carrier}")]
    EntryOutOfRange { entry: usize, carrier: usize },
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("carrier size {0} exceeds the checker cap of 256")]
    CarrierTooLarge(usize),
    #[error("carrier size must be positive")]
    EmptyCarrier,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("algebra too large: carrier would be {0}, cap is 64")]
    PairRingTooLarge(usize),
}

/// A candidate weak B-ring given by opaque operation tables.
///
/// Tables are flat, row-major: `join_table[i * m + j]` is the index of
/// `i \/ j`. No axiom is assumed; [`check_axioms`] tests all eleven.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BRingCandidate {
    pub carrier_size: usize,
    pub join_table: Vec<usize>,
    pub prod_table: Vec<usize>,
    pub hat_table: Vec<usize>,
    pub zero_index: usize,
    pub one_index: usize,
}

impl BRingCandidate {
    pub fn validate(&self) -> Result<(), TableError> {
        let m = self.carrier_size;
        if m == 0 {
            return Err(TableError::EmptyCarrier);
        }
        if m > 256 {
            return Err(TableError::CarrierTooLarge(m));
        }
        for (table, expected) in [
            (&self.join_table, m * m),
            (&self.prod_table, m * m),
            (&self.hat_table, m),
        ] {
            if table.len() != expected {
                return Err(TableError::WrongLength {
                    expected,
                    got: table.len(),
                });
            }
            if let Some(&entry) = table.iter().find(|&&e| e >= m) {
                return Err(TableError::EntryOutOfRange { entry, carrier: m });
            }
        }
        for &idx in [self.zero_index, self.one_index].iter() {
            if idx >= m {
                return Err(TableError::EntryOutOfRange {
                    entry: idx,
                    carrier: m,
                });
            }
        }
        Ok(())
    }

    fn join(&self, i: usize, j: usize) -> usize {
        self.join_table[i * self.carrier_size + j]
    }

    fn prod(&self, i: usize, j: usize) -> usize {
        self.prod_table[i * self.carrier_size + j]
    }

    fn hat(&self, i: usize) -> usize {
        self.hat_table[i]
    }

    /// Plain-text serialization; see [`BRingCandidate::parse`] for the format.
    pub fn to_text(&self) -> String {
        let m = self.carrier_size;
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", m, self.zero_index, self.one_index);
        for table in [&self.join_table, &self.prod_table] {
            for row in table.chunks(m) {
                let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
        let hat: Vec<String> = self.hat_table.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{}", hat.join(" "));
        out
    }

    /// Parses the plain-text table format: first line `m zero_index
    /// one_index`, then `m` rows of the join table, `m` rows of the product
    /// table, and one row for the hat table, all whitespace-separated
    /// decimal indices.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let parse_row = |line_no: usize, line: &str| -> Result<Vec<usize>, TableError> {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|e| TableError::Parse {
                        line: line_no + 1,
                        msg: format!("bad index {tok:?}: {e}"),
                    })
                })
                .collect()
        };
        let (no, header) = lines.next().ok_or(TableError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let header = parse_row(no, header)?;
        if header.len() != 3 {
            return Err(TableError::Parse {
                line: no + 1,
                msg: "header must be `m zero_index one_index`".into(),
            });
        }
        let (m, zero_index, one_index) = (header[0], header[1], header[2]);
        let mut read_rows = |count: usize| -> Result<Vec<usize>, TableError> {
            let mut out = Vec::with_capacity(count * m);
            for _ in 0..count {
                let (no, line) = lines.next().ok_or(TableError::Parse {
                    line: 0,
                    msg: "unexpected end of input".into(),
                })?;
                let row = parse_row(no, line)?;
                if row.len() != m {
                    return Err(TableError::Parse {
                        line: no + 1,
                        msg: format!("expected {m} entries, got {}", row.len()),
                    });
                }
                out.extend(row);
            }
            Ok(out)
        };
        let join_table = read_rows(m)?;
        let prod_table = read_rows(m)?;
        let hat_table = read_rows(1)?;
        let cand = Self {
            carrier_size: m,
            join_table,
            prod_table,
            hat_table,
            zero_index,
            one_index,
        };
        cand.validate()?;
        Ok(cand)
    }
}

/// Result of checking one axiom.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub number: u8,
    pub description: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Per-axiom results for all eleven axioms, in order (1)..(11).
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|a| !a.pass)
    }
}

/// Checks all eleven weak B-ring axioms over the full carrier.
///
/// Axioms (10) and (11) are tested exactly as printed (x \/ x^ = x^ \/ x and
/// x . x^ = x^ . x), even though they are instances of commutativity where
/// that holds.
pub fn check_axioms(cand: &BRingCandidate) -> Result<AxiomReport, TableError> {
    cand.validate()?;
    let m = cand.carrier_size;
    let zero = cand.zero_index;
    let one = cand.one_index;
    let mut axioms = Vec::with_capacity(11);

    let mut ternary = |number: u8,
                       description: &'static str,
                       f: &dyn Fn(usize, usize, usize) -> (usize, usize)| {
        let mut witness = None;
        'outer: for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    let (l, r) = f(x, y, z);
                    if l != r {
                        witness = Some(format!("x={x} y={y} z={z}: {l} != {r}"));
                        break 'outer;
                    }
                }
            }
        }
        axioms.push(AxiomCheck {
            number,
            description,
            pass: witness.is_none(),
            witness,
        });
    };

    ternary(1, "join associativity", &|x, y, z| {
        (cand.join(cand.join(x, y), z), cand.join(x, cand.join(y, z)))
    });
    ternary(4, "product associativity", &|x, y, z| {
        (cand.prod(cand.prod(x, y), z), cand.prod(x, cand.prod(y, z)))
    });
    ternary(7, "left distributivity", &|x, y, z| {
        (
            cand.prod(x, cand.join(y, z)),
            cand.join(cand.prod(x, y), cand.prod(x, z)),
        )
    });
    ternary(8, "right distributivity", &|x, y, z| {
        (
            cand.prod(cand.join(x, y), z),
            cand.join(cand.prod(x, z), cand.prod(y, z)),
        )
    });

    let mut binary = |number: u8,
                      description: &'static str,
                      f: &dyn Fn(usize, usize) -> (usize, usize)| {
        let mut witness = None;
        'outer: for x in 0..m {
            for y in 0..m {
                let (l, r) = f(x, y);
                if l != r {
                    witness = Some(format!("x={x} y={y}: {l} != {r}"));
                    break 'outer;
                }
            }
        }
        axioms.push(AxiomCheck {
            number,
            description,
            pass: witness.is_none(),
            witness,
        });
    };

    binary(2, "join commutativity", &|x, y| {
        (cand.join(x, y), cand.join(y, x))
    });

    let mut unary = |number: u8,
                     description: &'static str,
                     f: &dyn Fn(usize) -> (usize, usize)| {
        let mut witness = None;
        for x in 0..m {
            let (l, r) = f(x);
            if l != r {
                witness = Some(format!("x={x}: {l} != {r}"));
                break;
            }
        }
        axioms.push(AxiomCheck {
            number,
            description,
            pass: witness.is_none(),
            witness,
        });
    };

    unary(3, "zero is a join unit", &|x| (cand.join(x, zero), x));
    unary(5, "one is a two-sided product unit", &|x| {
        let left = cand.prod(x, one);
        let right = cand.prod(one, x);
        // both must equal x; collapse to a single comparison per side
        if left != x {
            (left, x)
        } else {
            (right, x)
        }
    });
    unary(6, "zero is absorbing", &|x| {
        let left = cand.prod(x, zero);
        let right = cand.prod(zero, x);
        if left != zero {
            (left, zero)
        } else {
            (right, zero)
        }
    });
    unary(9, "hat is an involution", &|x| (cand.hat(cand.hat(x)), x));
    unary(10, "x \\/ x^ = x^ \\/ x (as printed)", &|x| {
        (cand.join(x, cand.hat(x)), cand.join(cand.hat(x), x))
    });
    unary(11, "x . x^ = x^ . x (as printed)", &|x| {
        (cand.prod(x, cand.hat(x)), cand.prod(cand.hat(x), x))
    });

    axioms.sort_by_key(|a| a.number);
    debug_assert_eq!(axioms.len(), 11);
    Ok(AxiomReport { axioms })
}

/// Pair (a, b) over one base algebra; element of the twisted product
/// structure on A x A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairElement {
    pub a: Element,
    pub b: Element,
}

impl PairElement {
    pub fn new(a: Element, b: Element) -> Self {
        assert_eq!(a.algebra(), b.algebra(), "components from different algebras");
        Self { a, b }
    }
}

/// The twisted product: (a,b) /\ (c,d) = (a/\c, a/\d \/ b/\c \/ b/\d).
///
/// This is the multiplication of C[h]/(h^2 = h) transplanted to pairs, with
/// h = (0, 1) idempotent and (1, 0) the unit.
pub fn twisted_meet(p: &PairElement, q: &PairElement) -> PairElement {
    let first = p.a.meet(&q.a);
    let second = p
        .a
        .meet(&q.b)
        .join(&p.b.meet(&q.a))
        .join(&p.b.meet(&q.b));
    PairElement::new(first, second)
}

/// Componentwise join on pairs.
pub fn pair_join(p: &PairElement, q: &PairElement) -> PairElement {
    PairElement::new(p.a.join(&q.a), p.b.join(&q.b))
}

/// Componentwise complement on pairs.
pub fn pair_hat(p: &PairElement) -> PairElement {
    PairElement::new(p.a.complement(), p.b.complement())
}

/// h = (0, 1), the idempotent generator of the twisted structure.
pub fn pair_h(alg: &BoolAlgebra) -> PairElement {
    PairElement::new(alg.bottom(), alg.top())
}

/// All pairs in canonical order: index = a.mask * 2^n + b.mask.
pub fn all_pairs(alg: &BoolAlgebra) -> Vec<PairElement> {
    let elems: Vec<Element> = alg.elements().collect();
    let mut out = Vec::with_capacity(elems.len() * elems.len());
    for &a in &elems {
        for &b in &elems {
            out.push(PairElement::new(a, b));
        }
    }
    out
}

/// Canonical index of a pair within [`all_pairs`].
pub fn pair_index(alg: &BoolAlgebra, p: &PairElement) -> usize {
    (p.a.mask() as usize) * alg.size() + p.b.mask() as usize
}

/// Materializes the twisted structure on A x A as raw operation tables,
/// with zero = (0,0) and one = (1,0).
pub fn build_pair_ring(alg: &BoolAlgebra) -> Result<BRingCandidate, TableError> {
    let m = alg.size() * alg.size();
    if m > 64 {
        return Err(TableError::PairRingTooLarge(m));
    }
    let pairs = all_pairs(alg);
    let mut join_table = Vec::with_capacity(m * m);
    let mut prod_table = Vec::with_capacity(m * m);
    for p in &pairs {
        for q in &pairs {
            join_table.push(pair_index(alg, &pair_join(p, q)));
            prod_table.push(pair_index(alg, &twisted_meet(p, q)));
        }
    }
    let hat_table = pairs.iter().map(|p| pair_index(alg, &pair_hat(p))).collect();
    let zero = PairElement::new(alg.bottom(), alg.bottom());
    let one = PairElement::new(alg.top(), alg.bottom());
    Ok(BRingCandidate {
        carrier_size: m,
        join_table,
        prod_table,
        hat_table,
        zero_index: pair_index(alg, &zero),
        one_index: pair_index(alg, &one),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: u8) -> BoolAlgebra {
        BoolAlgebra::new(n).unwrap()
    }

    fn pair(alg: &BoolAlgebra, a: u32, b: u32) -> PairElement {
        PairElement::new(alg.element(a).unwrap(), alg.element(b).unwrap())
    }

    #[test]
    fn twisted_meet_unit_and_idempotent() {
        for n in 1..=3 {
            let a = alg(n);
            let one = PairElement::new(a.top(), a.bottom());
            let h = pair_h(&a);
            for p in all_pairs(&a) {
                assert_eq!(twisted_meet(&p, &one), p);
                assert_eq!(twisted_meet(&one, &p), p);
            }
            assert_eq!(twisted_meet(&h, &h), h);
        }
    }

    #[test]
    fn twisted_meet_hand_case() {
        let a1 = alg(1);
        // (1,1) /\ (0,1) = (0, 0 \/ 0 \/ 1) = (0,1)
        assert_eq!(
            twisted_meet(&pair(&a1, 1, 1), &pair(&a1, 0, 1)),
            pair(&a1, 0, 1)
        );
    }

    #[test]
    fn pair_ops_componentwise() {
        let a1 = alg(1);
        assert_eq!(pair_join(&pair(&a1, 0, 1), &pair(&a1, 1, 0)), pair(&a1, 1, 1));
        assert_eq!(pair_hat(&pair(&a1, 0, 0)), pair(&a1, 1, 1));
        for p in all_pairs(&alg(2)) {
            assert_eq!(pair_hat(&pair_hat(&p)), p);
        }
    }

    #[test]
    fn decomposition_identity() {
        // (a,b) = (a,0) \/ [(0,1) /\ (b,0)]
        for n in 1..=3u8 {
            let a = alg(n);
            let h = pair_h(&a);
            for p in all_pairs(&a) {
                let a0 = PairElement::new(p.a, a.bottom());
                let b0 = PairElement::new(p.b, a.bottom());
                assert_eq!(pair_join(&a0, &twisted_meet(&h, &b0)), p);
            }
        }
    }

    #[test]
    fn pair_ring_shape() {
        let a1 = alg(1);
        let ring = build_pair_ring(&a1).unwrap();
        assert_eq!(ring.carrier_size, 4);
        assert_eq!(ring.zero_index, 0);
        // one = (1,0) at index 1*2 + 0 = 2
        assert_eq!(ring.one_index, 2);
        // h = (0,1) at index 1; h . h = h
        assert_eq!(ring.prod_table[1 * 4 + 1], 1);
        assert!(build_pair_ring(&alg(4)).is_err());
    }

    #[test]
    fn pair_ring_satisfies_all_axioms() {
        for n in 1..=2u8 {
            let ring = build_pair_ring(&alg(n)).unwrap();
            let report = check_axioms(&ring).unwrap();
            assert_eq!(report.axioms.len(), 11);
            assert!(report.all_pass(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn broken_unit_fails_axiom_5() {
        let mut ring = build_pair_ring(&alg(1)).unwrap();
        let m = ring.carrier_size;
        let one = ring.one_index;
        // force 3 . 1 = 0, violating x . 1 = x
        ring.prod_table[3 * m + one] = 0;
        let report = check_axioms(&ring).unwrap();
        let ax5 = &report.axioms[4];
        assert_eq!(ax5.number, 5);
        assert!(!ax5.pass);
        assert!(ax5.witness.is_some());
    }

    #[test]
    fn malformed_tables_rejected() {
        let mut ring = build_pair_ring(&alg(1)).unwrap();
        ring.prod_table[0] = 99;
        assert!(check_axioms(&ring).is_err());
        ring.prod_table.truncate(3);
        assert!(matches!(
            check_axioms(&ring),
            Err(TableError::WrongLength { .. })
        ));
    }

    #[test]
    fn text_roundtrip_and_parse_errors() {
        let ring = build_pair_ring(&alg(1)).unwrap();
        let text = ring.to_text();
        let parsed = BRingCandidate::parse(&text).unwrap();
        assert_eq!(parsed, ring);

        assert!(BRingCandidate::parse("").is_err());
        assert!(BRingCandidate::parse("2 0").is_err());
        assert!(BRingCandidate::parse("2 0 1\n0 1\n1 0\n0 1\n1 0\nx y").is_err());
    }
}
