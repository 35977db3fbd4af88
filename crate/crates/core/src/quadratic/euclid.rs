//! Right induction on two-letter rotations as the subtractive Euclidean algorithm.

use crate::error::{Connection, Error, Result, Side};
use crate::iet::Iet;
use crate::induction::rauzy_step;

fn check_rotation(t: &Iet) -> Result<()> {
    if t.size() != 2 || t.permutation() != [1, 0] {
        return Err(Error::AlphabetMismatch(
            "the Euclidean view needs a two-letter rotation (orders xy / yx)".into(),
        ));
    }
    Ok(())
}

/// Partial quotients read off repeated `ψ`, as run lengths of identical cases.
///
/// Stops after `n` digits or at a connection; the step that hits the connection
/// counts toward the last run, so `(2, 1)` gives `[2]` and `(1, 1)` gives `[1]`.
pub fn euclid_expansion(t: &Iet, n: usize) -> Result<(Vec<u64>, Option<Connection>)> {
    check_rotation(t)?;
    let mut digits = Vec::new();
    let mut cur = t.clone();
    let mut case = None;
    let mut run = 0u64;
    while digits.len() < n {
        match rauzy_step(&cur, Side::Right) {
            Ok(step) => {
                if case.is_some_and(|c| c != step.case) {
                    digits.push(run);
                    run = 0;
                    if digits.len() == n {
                        break;
                    }
                }
                case = Some(step.case);
                run += 1;
                cur = step.result;
            }
            Err(Error::ConnectionDetected { connection, .. }) => {
                digits.push(run + 1);
                return Ok((digits, Some(connection)));
            }
            Err(e) => return Err(e),
        }
    }
    Ok((digits, None))
}

/// First `n` partial quotients of the continued fraction of `max(λ)/min(λ)`.
pub fn euclid_digits(t: &Iet, n: usize) -> Result<Vec<u64>> {
    let (digits, connection) = euclid_expansion(t, n)?;
    match connection {
        Some(connection) if digits.len() < n || n == 0 => {
            Err(Error::ConnectionDetected { step: digits.iter().sum::<u64>() as usize - 1, connection })
        }
        _ => Ok(digits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::QuadNum;

    fn rot(a: QuadNum, b: QuadNum) -> Iet {
        Iet::from_names("ab", "ba", vec![a, b], QuadNum::zero()).unwrap()
    }

    #[test]
    fn golden_rotation_gives_ones() {
        let a: QuadNum = "3/2 - 1/2*sqrt(5)".parse().unwrap();
        assert_eq!(euclid_digits(&rot(QuadNum::one() - &a, a), 10).unwrap(), vec![1; 10]);
    }

    #[test]
    fn silver_ratio() {
        // 1 + √2 = [2; 2, 2, ...]
        let r = rot("1 + sqrt(2)".parse().unwrap(), QuadNum::one());
        assert_eq!(euclid_digits(&r, 6).unwrap(), vec![2; 6]);
    }

    #[test]
    fn rationals_end_in_a_connection() {
        let (d, c) = euclid_expansion(&rot(2.into(), 1.into()), 5).unwrap();
        assert_eq!(d, vec![2]);
        assert!(c.is_some());
        let (d, c) = euclid_expansion(&rot(1.into(), 1.into()), 5).unwrap();
        assert_eq!(d, vec![1]);
        assert!(c.is_some());
        assert!(matches!(euclid_digits(&rot(1.into(), 1.into()), 3), Err(Error::ConnectionDetected { step: 0, .. })));
        // 7/3 = [2; 3]
        assert_eq!(euclid_expansion(&rot(7.into(), 3.into()), 5).unwrap().0, vec![2, 3]);
        assert_eq!(euclid_expansion(&rot(3.into(), 7.into()), 5).unwrap().0, vec![2, 3]);
        assert_eq!(euclid_digits(&rot(7.into(), 3.into()), 2).unwrap(), vec![2, 3]);
    }

    #[test]
    fn needs_a_rotation() {
        let t = Iet::from_names("abc", "cba", vec![1.into(), 1.into(), 1.into()], QuadNum::zero()).unwrap();
        assert!(euclid_digits(&t, 1).is_err());
    }
}
