//! Exponential and trigonometric maps on a base algebra A, parameterized by
//! a nonzero base element e, and their extension E to the twisted A x A.
//!
//! On A: exp(x) = x' \/ e, C(x) = x', S(x) = x. On pairs:
//! E(a, b) = (exp(a) /\ b', exp(a) /\ b). The pair-level statement
//! E(u \/ v) = E(u /\ v) is checked both as printed and as the homomorphism
//! reading E(u \/ v) = E(u) /\ E(v) (twisted product); the printed form has
//! a counterexample and the checker reports the first one found in canonical
//! order rather than hiding it.

use crate::boolalg::{BoolAlgebra, Element};
use crate::report::{CheckReport, DualCheckReport};
use crate::weak_bring::{all_pairs, pair_join, twisted_meet, PairElement};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpBaseError {
    #[error("exponential base must be nonzero")]
    ZeroBase,
}

/// A nonzero base element e for the exponential x -> x' \/ e.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpBase {
    e: Element,
}

impl ExpBase {
    pub fn new(e: Element) -> Result<Self, ExpBaseError> {
        if e.is_bottom() {
            return Err(ExpBaseError::ZeroBase);
        }
        Ok(Self { e })
    }

    pub fn element(&self) -> Element {
        self.e
    }
}

/// exp(x) = x' \/ e.
pub fn exp_e(base: &ExpBase, x: &Element) -> Element {
    x.complement().join(&base.e)
}

/// C(x) = x'.
pub fn cb(x: &Element) -> Element {
    x.complement()
}

/// S(x) = x.
pub fn sb(x: &Element) -> Element {
    *x
}

/// E(a, b) = (exp(a) /\ b', exp(a) /\ b).
pub fn big_e(base: &ExpBase, p: &PairElement) -> PairElement {
    let ea = exp_e(base, &p.a);
    PairElement::new(ea.meet(&p.b.complement()), ea.meet(&p.b))
}

fn fmt_pair(p: &PairElement) -> String {
    format!("({:#b},{:#b})", p.a.mask(), p.b.mask())
}

/// All nonzero bases of the algebra, in ascending mask order.
pub fn nonzero_bases(alg: &BoolAlgebra) -> Vec<ExpBase> {
    alg.elements()
        .filter(|e| !e.is_bottom())
        .map(|e| ExpBase::new(e).unwrap())
        .collect()
}

/// The five scalar identities on A, each verified over all x, y:
/// the exp/C addition laws, the S addition law, and both candidate
/// fundamental formulas (S/\S \/ C/\C = 1 and S \/ C = 1).
pub fn check_scalar_identities(alg: &BoolAlgebra, base: &ExpBase) -> Vec<CheckReport> {
    assert!(alg.atom_count() <= 4, "exhaustive check capped at 4 atoms");
    let elems: Vec<Element> = alg.elements().collect();
    let top = alg.top();
    let mut reports = Vec::with_capacity(5);

    let binary = |name: &str, f: &dyn Fn(&Element, &Element) -> (Element, Element)| {
        let mut cases = 0;
        for x in &elems {
            for y in &elems {
                cases += 1;
                let (lhs, rhs) = f(x, y);
                if lhs != rhs {
                    return CheckReport::fail(
                        name,
                        cases,
                        format!(
                            "x={:#b} y={:#b}: {:#b} != {:#b}",
                            x.mask(),
                            y.mask(),
                            lhs.mask(),
                            rhs.mask()
                        ),
                    );
                }
            }
        }
        CheckReport::pass(name, cases)
    };
    let unary = |name: &str, f: &dyn Fn(&Element) -> (Element, Element)| {
        let mut cases = 0;
        for x in &elems {
            cases += 1;
            let (lhs, rhs) = f(x);
            if lhs != rhs {
                return CheckReport::fail(
                    name,
                    cases,
                    format!("x={:#b}: {:#b} != {:#b}", x.mask(), lhs.mask(), rhs.mask()),
                );
            }
        }
        CheckReport::pass(name, cases)
    };

    reports.push(binary("scalar_exp_addition", &|x, y| {
        (exp_e(base, &x.join(y)), exp_e(base, x).meet(&exp_e(base, y)))
    }));
    reports.push(binary("scalar_cos_addition", &|x, y| {
        (cb(&x.join(y)), cb(x).meet(&cb(y)))
    }));
    reports.push(binary("scalar_sin_addition", &|x, y| {
        let rhs = sb(x)
            .meet(&cb(y))
            .join(&cb(x).meet(&sb(y)))
            .join(&sb(x).meet(&sb(y)));
        (sb(&x.join(y)), rhs)
    }));
    reports.push(unary("scalar_fundamental_squared", &|x| {
        let s = sb(x);
        let c = cb(x);
        (s.meet(&s).join(&c.meet(&c)), top)
    }));
    reports.push(unary("scalar_fundamental_plain", &|x| {
        (sb(x).join(&cb(x)), top)
    }));
    reports
}

/// The pair-level statement E(u \/ v) = E(u /\ v), in both readings.
///
/// `as_printed` checks the literal equality; `variant` checks the
/// homomorphism form E(u \/ v) = E(u) /\ E(v) under the twisted product.
/// Pairs are enumerated in canonical order (outer u, inner v, index
/// a.mask * 2^n + b.mask), so the first counterexample is deterministic.
pub fn check_theorem_pair_exp(alg: &BoolAlgebra, base: &ExpBase) -> DualCheckReport {
    assert!(alg.atom_count() <= 3, "exhaustive pair check capped at 3 atoms");
    let pairs = all_pairs(alg);
    let mut as_printed: Option<CheckReport> = None;
    let mut variant: Option<CheckReport> = None;
    let mut printed_cases = 0u64;
    let mut variant_cases = 0u64;
    for u in &pairs {
        for v in &pairs {
            let e_join = big_e(base, &pair_join(u, v));
            if as_printed.is_none() {
                printed_cases += 1;
                let e_meet = big_e(base, &twisted_meet(u, v));
                if e_join != e_meet {
                    as_printed = Some(CheckReport::fail(
                        "pair_exp_as_printed",
                        printed_cases,
                        format!(
                            "e={:#b} u={} v={}: E(u\\/v)={} but E(u/\\v)={}",
                            base.e.mask(),
                            fmt_pair(u),
                            fmt_pair(v),
                            fmt_pair(&e_join),
                            fmt_pair(&e_meet)
                        ),
                    ));
                }
            }
            if variant.is_none() {
                variant_cases += 1;
                let hom = twisted_meet(&big_e(base, u), &big_e(base, v));
                if e_join != hom {
                    variant = Some(CheckReport::fail(
                        "pair_exp_homomorphism",
                        variant_cases,
                        format!(
                            "e={:#b} u={} v={}: E(u\\/v)={} but E(u)/\\E(v)={}",
                            base.e.mask(),
                            fmt_pair(u),
                            fmt_pair(v),
                            fmt_pair(&e_join),
                            fmt_pair(&hom)
                        ),
                    ));
                }
            }
        }
    }
    DualCheckReport {
        as_printed: as_printed
            .unwrap_or_else(|| CheckReport::pass("pair_exp_as_printed", printed_cases)),
        variant: variant
            .unwrap_or_else(|| CheckReport::pass("pair_exp_homomorphism", variant_cases)),
    }
}

/// Euler-style pair formulas: E((0, y)) = (C(y), S(y)) for every y, and
/// E(h) = h for h = (0, 1).
pub fn check_euler_pair(alg: &BoolAlgebra, base: &ExpBase) -> CheckReport {
    assert!(alg.atom_count() <= 4, "exhaustive check capped at 4 atoms");
    let mut cases = 0;
    for y in alg.elements() {
        cases += 1;
        let p = PairElement::new(alg.bottom(), y);
        let lhs = big_e(base, &p);
        let rhs = PairElement::new(cb(&y), sb(&y));
        if lhs != rhs {
            return CheckReport::fail(
                "euler_pair",
                cases,
                format!(
                    "e={:#b} y={:#b}: E((0,y))={} expected {}",
                    base.e.mask(),
                    y.mask(),
                    fmt_pair(&lhs),
                    fmt_pair(&rhs)
                ),
            );
        }
    }
    // E(h) = h
    cases += 1;
    let h = PairElement::new(alg.bottom(), alg.top());
    let eh = big_e(base, &h);
    if eh != h {
        return CheckReport::fail(
            "euler_pair",
            cases,
            format!("e={:#b}: E(h)={} expected h", base.e.mask(), fmt_pair(&eh)),
        );
    }
    CheckReport::pass("euler_pair", cases)
}
