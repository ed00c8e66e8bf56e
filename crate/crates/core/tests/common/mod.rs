//! Brute-force isomorphism testing, written without the canonical-code
//! machinery so it can serve as an independent check on it.

#![allow(dead_code)]

use flowcensus_core::{CombinatorialMap, Dart, Mark, MarkKind, MarkedMap};

pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn edges(m: &CombinatorialMap) -> Vec<(Dart, Dart)> {
    (0..m.n_darts())
        .filter(|&d| d < m.alpha(d))
        .map(|d| (d, m.alpha(d)))
        .collect()
}

/// Calls `visit` with every dart bijection `a → b` that respects edges, i.e.
/// commutes with the two involutions. Stops early when `visit` returns true.
pub fn for_each_edge_bijection(
    a: &CombinatorialMap,
    b: &CombinatorialMap,
    mut visit: impl FnMut(&[Dart]) -> bool,
) -> bool {
    if a.n_darts() != b.n_darts() {
        return false;
    }
    let ea = edges(a);
    let eb = edges(b);
    let n_edges = ea.len();
    let mut perm: Vec<usize> = (0..n_edges).collect();
    let mut f = vec![0; a.n_darts()];
    loop {
        for flips in 0u32..(1 << n_edges) {
            for (i, &(x, y)) in ea.iter().enumerate() {
                let (u, v) = eb[perm[i]];
                if flips & (1 << i) == 0 {
                    f[x] = u;
                    f[y] = v;
                } else {
                    f[x] = v;
                    f[y] = u;
                }
            }
            if visit(&f) {
                return true;
            }
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// Whether `f` carries the rotation of `a` to that of `b` (reversed when
/// `reflect`).
pub fn carries_rotation(
    a: &CombinatorialMap,
    b: &CombinatorialMap,
    f: &[Dart],
    reflect: bool,
) -> bool {
    (0..a.n_darts()).all(|d| {
        if reflect {
            b.sigma(f[a.sigma(d)]) == f[d]
        } else {
            f[a.sigma(d)] == b.sigma(f[d])
        }
    })
}

pub fn brute_isomorphic(a: &CombinatorialMap, b: &CombinatorialMap, reflections: bool) -> bool {
    for_each_edge_bijection(a, b, |f| {
        carries_rotation(a, b, f, false) || (reflections && carries_rotation(a, b, f, true))
    })
}

/// Orientation-preserving automorphisms.
pub fn brute_automorphisms(m: &CombinatorialMap) -> usize {
    let mut count = 0;
    for_each_edge_bijection(m, m, |f| {
        if carries_rotation(m, m, f, false) {
            count += 1;
        }
        false
    });
    count
}

/// Image of a marked dart. A sink mark names the face on the dart's left,
/// which a reflection moves to the other side of the edge.
fn mark_image(kind: MarkKind, d: Dart, f: &[Dart], b: &CombinatorialMap, reflect: bool) -> Dart {
    if reflect && kind == MarkKind::Sink {
        b.alpha(f[d])
    } else {
        f[d]
    }
}

pub fn brute_marked_isomorphic(a: &MarkedMap, b: &MarkedMap, reflections: bool) -> bool {
    let (ma, mb): (Mark, Mark) = (a.mark(), b.mark());
    if ma.kind != mb.kind {
        return false;
    }
    for_each_edge_bijection(a.map(), b.map(), |f| {
        let ok = |reflect: bool| {
            carries_rotation(a.map(), b.map(), f, reflect)
                && mark_image(ma.kind, ma.dart, f, b.map(), reflect) == mb.dart
        };
        ok(false) || (reflections && ok(true))
    })
}

/// Connected spherical check with `alpha(d) = d ^ 1`, done by hand.
pub fn brute_is_spherical(sigma: &[Dart]) -> bool {
    let n = sigma.len();
    let cycles = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        let mut c = 0;
        for s in 0..n {
            if !seen[s] {
                c += 1;
                let mut d = s;
                while !seen[d] {
                    seen[d] = true;
                    d = f(d);
                }
            }
        }
        c
    };
    let v = cycles(&|d| sigma[d]);
    let faces = cycles(&|d| sigma[d ^ 1]);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(d) = stack.pop() {
        for x in [sigma[d], d ^ 1] {
            if !seen[x] {
                seen[x] = true;
                stack.push(x);
            }
        }
    }
    seen.iter().all(|&s| s) && v + faces == n / 2 + 2
}

/// Every connected spherical `sigma` on `2 * n_edges` darts with
/// `alpha(d) = d ^ 1`.
pub fn labelled_maps(n_edges: usize) -> Vec<Vec<Dart>> {
    let n = 2 * n_edges;
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if brute_is_spherical(&sigma) {
            out.push(sigma.clone());
        }
        if !next_permutation(&mut sigma) {
            return out;
        }
    }
}

pub fn from_sigma(sigma: Vec<Dart>) -> CombinatorialMap {
    let alpha = (0..sigma.len()).map(|d| d ^ 1).collect();
    CombinatorialMap::new(sigma, alpha).unwrap()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
