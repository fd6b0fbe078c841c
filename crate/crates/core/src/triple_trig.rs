//! Exponential and trigonometric maps on the product algebra B = A x A x A.
//!
//! For X = (a, b, c) the maps are
//!   exp(X) = (a', b', 1),  cos(X) = (1, b', c'),  sin(X) = (0, 0, c)
//! (prime denoting complement). The checkers below verify, by exhaustive
//! enumeration of B, the addition laws for exp/cos and sin, two candidate
//! fundamental trigonometric identities, the Euler-style formula
//! exp(J /\ X) = cos(X) \/ (J /\ sin(X)) with J = (0, 1, 1), and the product
//! formula it implies.

use crate::boolalg::{BoolAlgebra, Element};
use crate::report::CheckReport;

/// Element of B = A x A x A with pointwise operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub a: Element,
    pub b: Element,
    pub c: Element,
}

impl Triple {
    pub fn new(a: Element, b: Element, c: Element) -> Self {
        assert_eq!(a.algebra(), b.algebra(), "components from different algebras");
        assert_eq!(a.algebra(), c.algebra(), "components from different algebras");
        Self { a, b, c }
    }

    pub fn join(&self, other: &Triple) -> Triple {
        Triple {
            a: self.a.join(&other.a),
            b: self.b.join(&other.b),
            c: self.c.join(&other.c),
        }
    }

    pub fn meet(&self, other: &Triple) -> Triple {
        Triple {
            a: self.a.meet(&other.a),
            b: self.b.meet(&other.b),
            c: self.c.meet(&other.c),
        }
    }

    pub fn complement(&self) -> Triple {
        Triple {
            a: self.a.complement(),
            b: self.b.complement(),
            c: self.c.complement(),
        }
    }

    pub fn top(alg: &BoolAlgebra) -> Triple {
        Triple::new(alg.top(), alg.top(), alg.top())
    }

    pub fn bottom(alg: &BoolAlgebra) -> Triple {
        Triple::new(alg.bottom(), alg.bottom(), alg.bottom())
    }
}

/// J = (0, 1, 1), the imaginary-unit analogue of the Euler-style formula.
pub fn big_j(alg: &BoolAlgebra) -> Triple {
    Triple::new(alg.bottom(), alg.top(), alg.top())
}

/// Pi = (1, 0, 0), the element with cos(Pi) = 1 and sin(Pi) = 0.
pub fn big_pi(alg: &BoolAlgebra) -> Triple {
    Triple::new(alg.top(), alg.bottom(), alg.bottom())
}

pub fn exp3(x: &Triple) -> Triple {
    let alg = x.a.algebra();
    Triple::new(x.a.complement(), x.b.complement(), alg.top())
}

pub fn cos3(x: &Triple) -> Triple {
    let alg = x.a.algebra();
    Triple::new(alg.top(), x.b.complement(), x.c.complement())
}

pub fn sin3(x: &Triple) -> Triple {
    let alg = x.a.algebra();
    Triple::new(alg.bottom(), alg.bottom(), x.c)
}

fn fmt_triple(x: &Triple) -> String {
    format!("({:#b},{:#b},{:#b})", x.a.mask(), x.b.mask(), x.c.mask())
}

fn all_triples(alg: &BoolAlgebra) -> Vec<Triple> {
    let elems: Vec<Element> = alg.elements().collect();
    let mut out = Vec::with_capacity(elems.len().pow(3));
    // ascending masks, lexicographic over components
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                out.push(Triple::new(a, b, c));
            }
        }
    }
    out
}

fn check_unary<F>(alg: &BoolAlgebra, name: &str, mut check: F) -> CheckReport
where
    F: FnMut(&Triple) -> Option<(Triple, Triple)>,
{
    assert!(alg.atom_count() <= 4, "exhaustive check capped at 4 atoms");
    let mut cases = 0;
    for x in all_triples(alg) {
        cases += 1;
        if let Some((lhs, rhs)) = check(&x) {
            let witness = format!(
                "X={} lhs={} rhs={}",
                fmt_triple(&x),
                fmt_triple(&lhs),
                fmt_triple(&rhs)
            );
            return CheckReport::fail(name, cases, witness);
        }
    }
    CheckReport::pass(name, cases)
}

fn check_binary<F>(alg: &BoolAlgebra, name: &str, mut check: F) -> CheckReport
where
    F: FnMut(&Triple, &Triple) -> Option<(Triple, Triple)>,
{
    assert!(alg.atom_count() <= 4, "exhaustive check capped at 4 atoms");
    let triples = all_triples(alg);
    let mut cases = 0;
    for x in &triples {
        for y in &triples {
            cases += 1;
            if let Some((lhs, rhs)) = check(x, y) {
                let witness = format!(
                    "X={} Y={} lhs={} rhs={}",
                    fmt_triple(x),
                    fmt_triple(y),
                    fmt_triple(&lhs),
                    fmt_triple(&rhs)
                );
                return CheckReport::fail(name, cases, witness);
            }
        }
    }
    CheckReport::pass(name, cases)
}

/// exp(X \/ Y) = exp(X) /\ exp(Y) and cos(X \/ Y) = cos(X) /\ cos(Y),
/// over all pairs in B.
pub fn check_exp_addition(alg: &BoolAlgebra) -> CheckReport {
    check_binary(alg, "exp_cos_addition", |x, y| {
        let u = x.join(y);
        let e_lhs = exp3(&u);
        let e_rhs = exp3(x).meet(&exp3(y));
        if e_lhs != e_rhs {
            return Some((e_lhs, e_rhs));
        }
        let c_lhs = cos3(&u);
        let c_rhs = cos3(x).meet(&cos3(y));
        if c_lhs != c_rhs {
            return Some((c_lhs, c_rhs));
        }
        None
    })
}

/// sin(X \/ Y) = (sin X /\ cos Y) \/ (cos X /\ sin Y) \/ (sin X /\ sin Y).
pub fn check_sin_addition(alg: &BoolAlgebra) -> CheckReport {
    check_binary(alg, "sin_addition", |x, y| {
        let lhs = sin3(&x.join(y));
        let rhs = sin3(x)
            .meet(&cos3(y))
            .join(&cos3(x).meet(&sin3(y)))
            .join(&sin3(x).meet(&sin3(y)));
        (lhs != rhs).then_some((lhs, rhs))
    })
}

/// Both candidate fundamental identities:
///   (sin X /\ sin X) \/ (cos X /\ cos X) \/ cos(sin X) = 1
///   sin(X) \/ cos(sin X) = 1
pub fn check_fundamental(alg: &BoolAlgebra) -> CheckReport {
    let one = Triple::top(alg);
    check_unary(alg, "fundamental_identities", |x| {
        let s = sin3(x);
        let c = cos3(x);
        let cs = cos3(&s);
        let first = s.meet(&s).join(&c.meet(&c)).join(&cs);
        if first != one {
            return Some((first, one));
        }
        let second = s.join(&cs);
        (second != one).then_some((second, one))
    })
}

/// Euler-style formula exp(J /\ X) = cos(X) \/ (J /\ sin(X)).
pub fn check_euler_formula(alg: &BoolAlgebra) -> CheckReport {
    let j = big_j(alg);
    check_unary(alg, "euler_formula", |x| {
        let lhs = exp3(&j.meet(x));
        let rhs = cos3(x).join(&j.meet(&sin3(x)));
        (lhs != rhs).then_some((lhs, rhs))
    })
}

/// Product formula implied by the Euler-style identity:
/// cos(X\/Y) \/ (J /\ sin(X\/Y)) = [cos X \/ (J /\ sin X)] /\ [cos Y \/ (J /\ sin Y)].
pub fn check_product_formula(alg: &BoolAlgebra) -> CheckReport {
    let j = big_j(alg);
    let form = |x: &Triple| cos3(x).join(&j.meet(&sin3(x)));
    check_binary(alg, "product_formula", |x, y| {
        let lhs = form(&x.join(y));
        let rhs = form(x).meet(&form(y));
        (lhs != rhs).then_some((lhs, rhs))
    })
}

/// exp(J /\ Pi) = 1, the Euler-identity analogue, checked as a single case.
pub fn check_euler_point(alg: &BoolAlgebra) -> CheckReport {
    let lhs = exp3(&big_j(alg).meet(&big_pi(alg)));
    let one = Triple::top(alg);
    if lhs == one {
        CheckReport::pass("euler_point", 1)
    } else {
        CheckReport::fail(
            "euler_point",
            1,
            format!("exp(J/\\Pi)={} expected {}", fmt_triple(&lhs), fmt_triple(&one)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: u8) -> BoolAlgebra {
        BoolAlgebra::new(n).unwrap()
    }

    fn t(alg: &BoolAlgebra, a: u32, b: u32, c: u32) -> Triple {
        Triple::new(
            alg.element(a).unwrap(),
            alg.element(b).unwrap(),
            alg.element(c).unwrap(),
        )
    }

    #[test]
    fn exp3_pointwise() {
        let a1 = alg(1);
        assert_eq!(exp3(&Triple::bottom(&a1)), Triple::top(&a1));
        // (1,0,1) -> (0,1,1)
        assert_eq!(exp3(&t(&a1, 1, 0, 1)), t(&a1, 0, 1, 1));
        for x in super::all_triples(&alg(2)) {
            assert!(exp3(&x).c.is_top());
        }
    }

    #[test]
    fn cos_sin_at_pi() {
        for n in 1..=3 {
            let a = alg(n);
            let pi = big_pi(&a);
            assert_eq!(cos3(&pi), Triple::top(&a));
            assert_eq!(sin3(&pi), Triple::bottom(&a));
        }
        // n=1: cos((1,0,1)) = (1,1,0)
        let a1 = alg(1);
        assert_eq!(cos3(&t(&a1, 1, 0, 1)), t(&a1, 1, 1, 0));
    }

    #[test]
    fn exp_addition_hand_case() {
        let a1 = alg(1);
        let x = t(&a1, 1, 0, 0);
        let y = t(&a1, 0, 1, 0);
        let lhs = exp3(&x.join(&y));
        assert_eq!(lhs, t(&a1, 0, 0, 1));
        assert_eq!(lhs, exp3(&x).meet(&exp3(&y)));
    }

    #[test]
    fn exp_addition_exhaustive_n1_counts() {
        let r = check_exp_addition(&alg(1));
        assert!(r.passed());
        assert_eq!(r.cases, 64); // 8 triples squared
    }

    #[test]
    fn sin_addition_hand_case() {
        let a1 = alg(1);
        let x = t(&a1, 0, 0, 1);
        let y = Triple::bottom(&a1);
        let lhs = sin3(&x.join(&y));
        let rhs = sin3(&x)
            .meet(&cos3(&y))
            .join(&cos3(&x).meet(&sin3(&y)))
            .join(&sin3(&x).meet(&sin3(&y)));
        assert_eq!(lhs, t(&a1, 0, 0, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_formula_hand_case() {
        let a1 = alg(1);
        let x = t(&a1, 1, 0, 1);
        let j = big_j(&a1);
        let lhs = exp3(&j.meet(&x));
        assert_eq!(lhs, Triple::top(&a1));
        let rhs = cos3(&x).join(&j.meet(&sin3(&x)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fundamental_hand_case() {
        let a1 = alg(1);
        let x = Triple::top(&a1);
        let lhs = sin3(&x).join(&cos3(&sin3(&x)));
        // (0,0,1) \/ (1,1,0) = (1,1,1)
        assert_eq!(lhs, Triple::top(&a1));
    }

    #[test]
    fn all_checks_pass_n1_to_n2() {
        for n in 1..=2 {
            let a = alg(n);
            assert!(check_exp_addition(&a).passed());
            assert!(check_sin_addition(&a).passed());
            assert!(check_fundamental(&a).passed());
            assert!(check_euler_formula(&a).passed());
            assert!(check_product_formula(&a).passed());
            assert!(check_euler_point(&a).passed());
        }
    }

    #[test]
    fn euler_formula_case_counts() {
        // |B| = (2^n)^3
        let r2 = check_euler_formula(&alg(2));
        assert!(r2.passed());
        assert_eq!(r2.cases, 64);
        let r4 = check_euler_formula(&alg(4));
        assert!(r4.passed());
        assert_eq!(r4.cases, 4096);
    }

    #[test]
    fn sin_is_idempotent_and_cos_first_component_top() {
        for x in super::all_triples(&alg(2)) {
            assert_eq!(sin3(&sin3(&x)), sin3(&x));
            assert!(cos3(&x).a.is_top());
        }
    }

    #[test]
    fn counterexample_reported_for_false_identity() {
        // sin(X) = cos(X) is false; the checker must surface a witness.
        let a1 = alg(1);
        let r = super::check_unary(&a1, "bogus", |x| {
            let lhs = sin3(x);
            let rhs = cos3(x);
            (lhs != rhs).then_some((lhs, rhs))
        });
        assert!(!r.passed());
        assert!(r.counterexample.is_some());
        assert_eq!(r.cases, 1); // first triple (0,0,0) already fails
    }
}
