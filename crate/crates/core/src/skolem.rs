//! Skolem and hooked Skolem sequences.
//!
//! A Skolem sequence of order `k` pairs up the positions `1..=2k` so that the
//! pair with index `d` sits at distance exactly `d`. It exists iff
//! `k ≡ 0, 1 (mod 4)`. For `k ≡ 2, 3 (mod 4)` the hooked variant covers
//! `1..=2k+1` with position `2k` left empty.
//!
//! The closed forms below hold for every order from 6 upward; smaller orders
//! are found by backtracking.

/// Positions `(a, a + d)` for `d = 1..=order`, returned in order of `d`.
///
/// Position set is `1..=2·order` when `order % 4 ∈ {0, 1}`, otherwise
/// `1..=2·order+1` without `2·order`.
pub fn skolem_pairs(order: usize) -> Vec<(usize, usize)> {
    if order == 0 {
        return Vec::new();
    }
    let s = order / 4;
    let raw = match order % 4 {
        0 if s >= 2 => closed_form_0(s),
        1 if s >= 2 => closed_form_1(s),
        2 if s >= 1 => closed_form_2(s),
        3 if s >= 2 => closed_form_3(s),
        _ => search(order).expect("every order has a (hooked) Skolem sequence"),
    };
    let mut by_diff = vec![(0, 0); order];
    for (a, b) in raw {
        by_diff[b - a - 1] = (a, b);
    }
    by_diff
}

fn closed_form_0(s: usize) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = (1..=2 * s).map(|r| (4 * s + r - 1, 8 * s - r + 1)).collect();
    p.extend((1..s - 1).map(|r| (r, 4 * s - r - 1)));
    p.extend((1..s - 1).map(|r| (s + r + 1, 3 * s - r)));
    p.extend([(s - 1, 3 * s), (s, s + 1), (2 * s, 4 * s - 1), (2 * s + 1, 6 * s)]);
    p
}

fn closed_form_1(s: usize) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = (1..=2 * s).map(|r| (4 * s + r + 1, 8 * s - r + 3)).collect();
    p.extend((1..=s).map(|r| (r, 4 * s - r + 1)));
    p.extend((1..s - 1).map(|r| (s + r + 2, 3 * s - r + 1)));
    p.extend([(s + 1, s + 2), (2 * s + 2, 4 * s + 1), (2 * s + 1, 6 * s + 2)]);
    p
}

fn closed_form_2(s: usize) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = (1..=2 * s).map(|r| (r, 4 * s + 2 - r)).collect();
    p.extend((1..s).map(|r| (4 * s + 3 + r, 8 * s + 4 - r)));
    p.extend((1..s).map(|r| (5 * s + 2 + r, 7 * s + 3 - r)));
    p.extend([
        (2 * s + 1, 6 * s + 2),
        (4 * s + 2, 6 * s + 3),
        (4 * s + 3, 8 * s + 5),
        (7 * s + 3, 7 * s + 4),
    ]);
    p
}

fn closed_form_3(s: usize) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = (1..=2 * s + 1).map(|r| (r, 4 * s + 4 - r)).collect();
    p.extend((1..s - 1).map(|r| (4 * s + 3 + r, 8 * s + 6 - r)));
    p.extend((1..s).map(|r| (5 * s + 5 + r, 7 * s + 6 - r)));
    p.extend([
        (2 * s + 2, 6 * s + 5),
        (5 * s + 2, 7 * s + 7),
        (5 * s + 3, 7 * s + 6),
        (5 * s + 4, 5 * s + 5),
        (6 * s + 6, 8 * s + 7),
    ]);
    p
}

fn search(order: usize) -> Option<Vec<(usize, usize)>> {
    let hooked = matches!(order % 4, 2 | 3);
    let len = if hooked { 2 * order + 1 } else { 2 * order };
    let mut used = vec![false; len + 1];
    if hooked {
        used[2 * order] = true;
    }
    let mut out = Vec::with_capacity(order);
    place(order, len, &mut used, &mut out).then_some(out)
}

fn place(d: usize, len: usize, used: &mut [bool], out: &mut Vec<(usize, usize)>) -> bool {
    if d == 0 {
        return true;
    }
    for a in 1..=len - d {
        if !used[a] && !used[a + d] {
            used[a] = true;
            used[a + d] = true;
            out.push((a, a + d));
            if place(d - 1, len, used, out) {
                return true;
            }
            out.pop();
            used[a] = false;
            used[a + d] = false;
        }
    }
    false
}
