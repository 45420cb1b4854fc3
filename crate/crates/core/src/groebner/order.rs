//! Monomial orders on exponent vectors `[s, t, x, y]`.

use super::mpoly::{total_degree, Exp};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Lexicographic with `s > t > x > y`.
    Lex,
    /// Graded reverse lexicographic with `s > t > x > y`.
    GrevLex,
    /// Block order eliminating `s`: compare the `s` exponent first, then
    /// graded reverse lex on `t, x, y`.
    ElimS,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Exp, b: &Exp) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b, 0),
            MonomialOrder::ElimS => a[0].cmp(&b[0]).then_with(|| grevlex(a, b, 1)),
        }
    }

    /// True if the order eliminates every variable before slot `k`: any
    /// monomial involving them beats every monomial free of them.
    pub fn eliminates_prefix(self, k: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::GrevLex => k == 0,
            MonomialOrder::ElimS => k <= 1,
        }
    }
}

fn grevlex(a: &Exp, b: &Exp, from: usize) -> Ordering {
    let da: u32 = a[from..].iter().sum();
    let db: u32 = b[from..].iter().sum();
    if from == 0 {
        debug_assert_eq!(da, total_degree(a));
    }
    da.cmp(&db).then_with(|| {
        for i in (from..4).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let x2 = [0, 0, 2, 0];
        let xy = [0, 0, 1, 1];
        let t = [0, 1, 0, 0];
        let y3 = [0, 0, 0, 3];
        assert_eq!(MonomialOrder::Lex.cmp(&t, &x2), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&t, &x2), Ordering::Less);
        assert_eq!(MonomialOrder::GrevLex.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&y3, &x2), Ordering::Greater);
        assert_eq!(MonomialOrder::ElimS.cmp(&[1, 0, 0, 0], &y3), Ordering::Greater);
    }
}
