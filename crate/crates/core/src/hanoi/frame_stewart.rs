use std::collections::HashMap;

use serde::Serialize;

use crate::group::Letter;

/// Frame-Stewart move count `FS(n, k)`:
/// `FS(n, 3) = 2^n - 1`, and for `k >= 4`
/// `FS(n, k) = min_{1 <= t < n} 2 FS(t, k) + FS(n - t, k - 1)`
/// with `FS(0, k) = 0`, `FS(1, k) = 1`. Saturates at `u128::MAX`.
pub fn frame_stewart_count(n: usize, k: usize) -> u128 {
    assert!(k >= 3, "Frame-Stewart needs at least three pegs");
    let mut memo = HashMap::new();
    fs(n, k, &mut memo).0
}

/// The split `t` achieving the minimum (smallest on ties); `None` for
/// `n < 2` or `k = 3`.
pub fn frame_stewart_split(n: usize, k: usize) -> Option<usize> {
    assert!(k >= 3, "Frame-Stewart needs at least three pegs");
    let mut memo = HashMap::new();
    fs(n, k, &mut memo).1
}

fn fs(
    n: usize,
    k: usize,
    memo: &mut HashMap<(usize, usize), (u128, Option<usize>)>,
) -> (u128, Option<usize>) {
    if n <= 1 {
        return (n as u128, None);
    }
    if k == 3 {
        let count = if n >= 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        return (count, None);
    }
    if let Some(&hit) = memo.get(&(n, k)) {
        return hit;
    }
    let mut best = (u128::MAX, None);
    for t in 1..n {
        let moves = fs(t, k, memo)
            .0
            .saturating_mul(2)
            .saturating_add(fs(n - t, k - 1, memo).0);
        if moves < best.0 {
            best = (moves, Some(t));
        }
    }
    memo.insert((n, k), best);
    best
}

/// A disk moved from the top of one peg to the top of another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PegMove {
    pub from: Letter,
    pub to: Letter,
}

/// The classical optimal three-peg solution moving `n` disks from `from`
/// to `to` (`2^n - 1` moves).
pub fn frame_stewart_moves(n: usize, from: Letter, to: Letter) -> Vec<PegMove> {
    assert!(from < 3 && to < 3 && from != to);
    let via = 3 - from - to;
    let mut out = Vec::with_capacity((1usize << n.min(30)).saturating_sub(1));
    tower(n, from, to, via, &mut out);
    out
}

fn tower(n: usize, from: Letter, to: Letter, via: Letter, out: &mut Vec<PegMove>) {
    if n == 0 {
        return;
    }
    tower(n - 1, from, via, to, out);
    out.push(PegMove { from, to });
    tower(n - 1, via, to, from, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(frame_stewart_count(5, 3), 31);
        assert_eq!(frame_stewart_count(4, 4), 9);
        assert_eq!(frame_stewart_count(5, 4), 13);
        for k in 3..7 {
            assert_eq!(frame_stewart_count(0, k), 0);
            assert_eq!(frame_stewart_count(1, k), 1);
        }
        // known four-peg values
        let four: Vec<u128> = (1..=10).map(|n| frame_stewart_count(n, 4)).collect();
        assert_eq!(four, vec![1, 3, 5, 9, 13, 17, 25, 33, 41, 49]);
    }

    #[test]
    fn ties_go_to_the_smallest_split() {
        // FS(3,4): t=1 gives 2+3=5, t=2 gives 6+1=7
        assert_eq!(frame_stewart_split(3, 4), Some(1));
        // FS(5,4)=13 at t=2 (2*3+7) and t=3 (2*5+3)
        assert_eq!(frame_stewart_split(5, 4), Some(2));
    }

    #[test]
    fn three_peg_sequence_length() {
        for n in 0..=10 {
            assert_eq!(frame_stewart_moves(n, 0, 1).len(), (1 << n) - 1);
        }
    }

    #[test]
    fn saturates() {
        assert_eq!(frame_stewart_count(200, 3), u128::MAX);
    }
}
