//! Braid-condition checker for finite maps phi : X x X -> X x X, with the
//! concrete solution families on Boolean-algebra carriers and a full
//! enumeration of solutions on the two-element carrier.
//!
//! The condition is phi12 phi23 phi12 = phi23 phi12 phi23 on triples, where
//! phi12(x,y,z) = (phi(x,y), z) and phi23(x,y,z) = (x, phi(y,z)). Maps are
//! stored as explicit lookup tables, so verification never trusts the
//! constructors.

use crate::boolalg::{BoolAlgebra, Element};
use crate::report::CheckReport;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("table entry ({0}, {1}) out of range for carrier size {2}")]
    EntryOutOfRange(usize, usize, usize),
    #[error("expected {expected} table entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("carrier size {0} exceeds the checker cap of 512")]
    CarrierTooLarge(usize),
    #[error("carrier size must be positive")]
    EmptyCarrier,
    #[error("enumeration is only implemented for carrier size 2, got {0}")]
    UnsupportedEnumeration(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A total map X x X -> X x X on the carrier {0..m-1}, as a lookup table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMapTable {
    m: usize,
    table: Vec<(usize, usize)>,
}

impl SquareMapTable {
    pub fn new(m: usize, table: Vec<(usize, usize)>) -> Result<Self, BraidError> {
        if m == 0 {
            return Err(BraidError::EmptyCarrier);
        }
        if m > 512 {
            return Err(BraidError::CarrierTooLarge(m));
        }
        if table.len() != m * m {
            return Err(BraidError::WrongLength {
                expected: m * m,
                got: table.len(),
            });
        }
        if let Some(&(p, q)) = table.iter().find(|&&(p, q)| p >= m || q >= m) {
            return Err(BraidError::EntryOutOfRange(p, q, m));
        }
        Ok(Self { m, table })
    }

    /// Builds the table from a closure over carrier indices.
    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self, BraidError> {
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(f(i, j));
            }
        }
        Self::new(m, table)
    }

    pub fn carrier_size(&self) -> usize {
        self.m
    }

    pub fn apply(&self, i: usize, j: usize) -> (usize, usize) {
        self.table[i * self.m + j]
    }

    /// Identity map on a carrier of size m.
    pub fn identity(m: usize) -> Result<Self, BraidError> {
        Self::from_fn(m, |i, j| (i, j))
    }

    /// Plain-text serialization: first line m, then one `i j -> p q` line
    /// per input pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.m);
        for i in 0..self.m {
            for j in 0..self.m {
                let (p, q) = self.apply(i, j);
                let _ = writeln!(out, "{i} {j} -> {p} {q}");
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (no, header) = lines.next().ok_or(BraidError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let m: usize = header.trim().parse().map_err(|e| BraidError::Parse {
            line: no + 1,
            msg: format!("bad carrier size: {e}"),
        })?;
        if m == 0 || m > 512 {
            return Err(BraidError::Parse {
                line: no + 1,
                msg: format!("carrier size {m} out of range"),
            });
        }
        let mut table = vec![None; m * m];
        for (no, line) in lines {
            let err = |msg: String| BraidError::Parse { line: no + 1, msg };
            let (input, output) = line
                .split_once("->")
                .ok_or_else(|| err("expected `i j -> p q`".into()))?;
            let parse_pair = |s: &str| -> Result<(usize, usize), BraidError> {
                let mut it = s.split_whitespace();
                let a = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(format!("bad pair {s:?}")))?;
                let b = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(format!("bad pair {s:?}")))?;
                if it.next().is_some() {
                    return Err(err(format!("trailing tokens in {s:?}")));
                }
                Ok((a, b))
            };
            let (i, j) = parse_pair(input)?;
            let (p, q) = parse_pair(output)?;
            if i >= m || j >= m {
                return Err(err(format!("input ({i}, {j}) out of range")));
            }
            table[i * m + j] = Some((p, q));
        }
        let table: Option<Vec<(usize, usize)>> = table.into_iter().collect();
        let table = table.ok_or(BraidError::Parse {
            line: 0,
            msg: "table is not total: some input pair is missing".into(),
        })?;
        Self::new(m, table)
    }
}

/// Verdict of a braid-condition check with the first differing triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidVerdict {
    pub holds: bool,
    pub witness: Option<BraidWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWitness {
    pub input: (usize, usize, usize),
    pub lhs: (usize, usize, usize),
    pub rhs: (usize, usize, usize),
}

fn phi12(phi: &SquareMapTable, t: (usize, usize, usize)) -> (usize, usize, usize) {
    let (p, q) = phi.apply(t.0, t.1);
    (p, q, t.2)
}

fn phi23(phi: &SquareMapTable, t: (usize, usize, usize)) -> (usize, usize, usize) {
    let (p, q) = phi.apply(t.1, t.2);
    (t.0, p, q)
}

/// Evaluates phi12 phi23 phi12 on one triple.
pub fn compose_121(phi: &SquareMapTable, t: (usize, usize, usize)) -> (usize, usize, usize) {
    phi12(phi, phi23(phi, phi12(phi, t)))
}

/// Evaluates phi23 phi12 phi23 on one triple.
pub fn compose_232(phi: &SquareMapTable, t: (usize, usize, usize)) -> (usize, usize, usize) {
    phi23(phi, phi12(phi, phi23(phi, t)))
}

/// Checks the braid condition over all m^3 triples.
pub fn braid_check(phi: &SquareMapTable) -> BraidVerdict {
    let m = phi.carrier_size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let t = (x, y, z);
                let lhs = compose_121(phi, t);
                let rhs = compose_232(phi, t);
                if lhs != rhs {
                    return BraidVerdict {
                        holds: false,
                        witness: Some(BraidWitness { input: t, lhs, rhs }),
                    };
                }
            }
        }
    }
    BraidVerdict {
        holds: true,
        witness: None,
    }
}

fn mask_index(x: &Element) -> usize {
    x.mask() as usize
}

fn elems(alg: &BoolAlgebra) -> Vec<Element> {
    alg.elements().collect()
}

/// The map (x, y) -> (y', y) on the algebra carrier.
pub fn phi_complement(alg: &BoolAlgebra) -> SquareMapTable {
    assert!(alg.atom_count() <= 3, "carrier capped at 3 atoms");
    let es = elems(alg);
    SquareMapTable::from_fn(alg.size(), |_, j| {
        let y = es[j];
        (mask_index(&y.complement()), j)
    })
    .expect("carrier within bounds")
}

/// The parameterized family (a, b) -> (a \/ xb, (x' \/ xa)b).
pub fn phi_param(alg: &BoolAlgebra, x: &Element) -> SquareMapTable {
    assert!(alg.atom_count() <= 3, "carrier capped at 3 atoms");
    let es = elems(alg);
    let xc = x.complement();
    SquareMapTable::from_fn(alg.size(), |i, j| {
        let (a, b) = (es[i], es[j]);
        let first = a.join(&x.meet(&b));
        let second = xc.join(&x.meet(&a)).meet(&b);
        (mask_index(&first), mask_index(&second))
    })
    .expect("carrier within bounds")
}

/// The same family built through the blend C(x) Id \/ P S(x), i.e.
/// componentwise (x'a, x'b) \/ (x(a \/ b), xab). Kept independent of
/// [`phi_param`] so the two constructions can be compared table-to-table.
pub fn blend(alg: &BoolAlgebra, x: &Element) -> SquareMapTable {
    assert!(alg.atom_count() <= 3, "carrier capped at 3 atoms");
    let es = elems(alg);
    let xc = x.complement();
    SquareMapTable::from_fn(alg.size(), |i, j| {
        let (a, b) = (es[i], es[j]);
        let id_part = (xc.meet(&a), xc.meet(&b));
        let p_part = (x.meet(&a.join(&b)), x.meet(&a).meet(&b));
        (
            mask_index(&id_part.0.join(&p_part.0)),
            mask_index(&id_part.1.join(&p_part.1)),
        )
    })
    .expect("carrier within bounds")
}

/// For every parameter x: the braid condition holds for phi_param(x), and
/// both closed-form composites from the parameterized family match the
/// composed table evaluation pointwise.
pub fn check_param_family(alg: &BoolAlgebra) -> CheckReport {
    assert!(alg.atom_count() <= 3, "carrier capped at 3 atoms");
    let es = elems(alg);
    let mut cases = 0u64;
    for x in &es {
        let phi = phi_param(alg, x);
        cases += 1;
        let verdict = braid_check(&phi);
        if let Some(w) = verdict.witness {
            return CheckReport::fail(
                "param_family_braid",
                cases,
                format!(
                    "x={:#b}: braid fails at {:?}: {:?} != {:?}",
                    x.mask(),
                    w.input,
                    w.lhs,
                    w.rhs
                ),
            );
        }
        let xc = x.complement();
        for a in &es {
            for b in &es {
                for c in &es {
                    cases += 1;
                    // closed forms of both composites:
                    // (a \/ x(b \/ c), x'b \/ xab \/ xac \/ xbc, x'c \/ xabc)
                    let first = a.join(&x.meet(&b.join(c)));
                    let second = xc
                        .meet(b)
                        .join(&x.meet(a).meet(b))
                        .join(&x.meet(a).meet(c))
                        .join(&x.meet(b).meet(c));
                    let third = xc.meet(c).join(&x.meet(a).meet(b).meet(c));
                    let closed = (
                        mask_index(&first),
                        mask_index(&second),
                        mask_index(&third),
                    );
                    let t = (mask_index(a), mask_index(b), mask_index(c));
                    let lhs = compose_121(&phi, t);
                    let rhs = compose_232(&phi, t);
                    if lhs != closed || rhs != closed {
                        return CheckReport::fail(
                            "param_family_braid",
                            cases,
                            format!(
                                "x={:#b} input={:?}: closed={:?} lhs={:?} rhs={:?}",
                                x.mask(),
                                t,
                                closed,
                                lhs,
                                rhs
                            ),
                        );
                    }
                }
            }
        }
    }
    CheckReport::pass("param_family_braid", cases)
}

/// Exhaustively enumerates all maps on the two-element carrier and returns
/// the braid solutions in ascending table order.
pub fn enumerate_solutions(m: usize) -> Result<Vec<SquareMapTable>, BraidError> {
    if m != 2 {
        return Err(BraidError::UnsupportedEnumeration(m));
    }
    // 4 inputs, 4 possible outputs each: 256 candidate maps
    let outputs = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut solutions = Vec::new();
    for code in 0..256usize {
        let table: Vec<(usize, usize)> = (0..4)
            .map(|slot| outputs[(code >> (2 * slot)) & 0b11])
            .collect();
        let phi = SquareMapTable::new(2, table).expect("entries in range");
        if braid_check(&phi).holds {
            solutions.push(phi);
        }
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: u8) -> BoolAlgebra {
        BoolAlgebra::new(n).unwrap()
    }

    #[test]
    fn identity_and_swap_are_solutions() {
        for m in [2usize, 3, 5] {
            assert!(braid_check(&SquareMapTable::identity(m).unwrap()).holds);
            let swap = SquareMapTable::from_fn(m, |i, j| (j, i)).unwrap();
            assert!(braid_check(&swap).holds);
        }
    }

    #[test]
    fn non_solution_is_refuted_with_witness() {
        // identity except phi(0,0) = (1,1)
        let mut table = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
        table[0] = (1, 1);
        let phi = SquareMapTable::new(2, table).unwrap();
        let verdict = braid_check(&phi);
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_ne!(compose_121(&phi, w.input), compose_232(&phi, w.input));
    }

    #[test]
    fn complement_map_is_a_solution_with_known_composites() {
        for n in 1..=3u8 {
            let a = alg(n);
            let phi = phi_complement(&a);
            assert!(braid_check(&phi).holds);
            let full = a.size() - 1;
            for x in 0..a.size() {
                for y in 0..a.size() {
                    for z in 0..a.size() {
                        // both composites send (x,y,z) to (z, z', z)
                        let expected = (z, full ^ z, z);
                        assert_eq!(compose_121(&phi, (x, y, z)), expected);
                        assert_eq!(compose_232(&phi, (x, y, z)), expected);
                    }
                }
            }
            // output never depends on the first argument
            for y in 0..a.size() {
                let reference = phi.apply(0, y);
                for x in 1..a.size() {
                    assert_eq!(phi.apply(x, y), reference);
                }
            }
        }
        // n=1: (0,1) -> (0,1)
        let phi = phi_complement(&alg(1));
        assert_eq!(phi.apply(0, 1), (0, 1));
    }

    #[test]
    fn param_family_endpoints() {
        let a2 = alg(2);
        // x = 0 gives the identity
        assert_eq!(
            phi_param(&a2, &a2.bottom()),
            SquareMapTable::identity(a2.size()).unwrap()
        );
        // x = 1 gives P(a,b) = (a \/ b, ab)
        let p = SquareMapTable::from_fn(a2.size(), |i, j| (i | j, i & j)).unwrap();
        assert_eq!(phi_param(&a2, &a2.top()), p);
        // n=2, x = 01, (a,b) = (10, 11): first 10 \/ (01/\11) = 11,
        // second (10 \/ (01/\10)) /\ 11 = 10
        let x = a2.element(0b01).unwrap();
        assert_eq!(phi_param(&a2, &x).apply(0b10, 0b11), (0b11, 0b10));
    }

    #[test]
    fn param_family_braid_and_closed_forms() {
        for n in 1..=2u8 {
            let a = alg(n);
            let r = check_param_family(&a);
            assert!(r.passed(), "{:?}", r);
        }
    }

    #[test]
    fn blend_equals_param_tables() {
        for n in 1..=3u8 {
            let a = alg(n);
            for x in a.elements() {
                assert_eq!(blend(&a, &x), phi_param(&a, &x));
            }
        }
    }

    #[test]
    fn enumeration_contains_identity_and_swap() {
        let solutions = enumerate_solutions(2).unwrap();
        let identity = SquareMapTable::identity(2).unwrap();
        let swap = SquareMapTable::from_fn(2, |i, j| (j, i)).unwrap();
        assert!(solutions.contains(&identity));
        assert!(solutions.contains(&swap));
        // deterministic order: re-running yields the same list
        assert_eq!(solutions, enumerate_solutions(2).unwrap());
        assert!(enumerate_solutions(3).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let phi = phi_param(&alg(2), &alg(2).element(0b10).unwrap());
        let parsed = SquareMapTable::parse(&phi.to_text()).unwrap();
        assert_eq!(parsed, phi);

        assert!(SquareMapTable::parse("").is_err());
        assert!(SquareMapTable::parse("2\n0 0 -> 0 0").is_err()); // not total
        assert!(SquareMapTable::parse("2\n0 0 -> 9 0\n0 1 -> 0 0\n1 0 -> 0 0\n1 1 -> 0 0").is_err());
    }
}
