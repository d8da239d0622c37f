use super::{FiniteGroup, GroupError, MAX_ORDER};

/// Catalogue of generated groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    /// Cyclic group of order n; element k is the k-th power of the generator.
    Cyclic(usize),
    /// Dihedral group of the given order 2m; index `f * m + i` is `r^i s^f`.
    Dihedral(usize),
    /// Symmetric group on n points, elements in lexicographic order of their
    /// image arrays.
    Symmetric(usize),
    /// Even permutations of n points, lexicographic order.
    Alternating(usize),
    /// Quaternion group: 1, -1, i, -i, j, -j, k, -k.
    Quaternion8,
    Product(Box<GroupFamily>, Box<GroupFamily>),
}

impl GroupFamily {
    pub fn order(&self) -> Option<usize> {
        Some(match self {
            GroupFamily::Cyclic(n) | GroupFamily::Dihedral(n) => *n,
            GroupFamily::Symmetric(n) => factorial(*n)?,
            GroupFamily::Alternating(n) => {
                if *n < 2 {
                    1
                } else {
                    factorial(*n)? / 2
                }
            }
            GroupFamily::Quaternion8 => 8,
            GroupFamily::Product(a, b) => a.order()?.checked_mul(b.order()?)?,
        })
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// All permutations of `0..n` in lexicographic order of their image arrays.
pub fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

pub(crate) fn permutation_parity(p: &[usize]) -> bool {
    // true when odd
    let mut seen = vec![false; p.len()];
    let mut odd = false;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

fn group_from_perms(perms: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let n = perms.len();
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(n * n);
    let mut buf = vec![0; perms.first().map_or(0, Vec::len)];
    for a in &perms {
        for b in &perms {
            // (a * b)(x) = a(b(x))
            for (x, slot) in buf.iter_mut().enumerate() {
                *slot = a[b[x]];
            }
            table.push(index[buf.as_slice()] as u16);
        }
    }
    FiniteGroup::from_flat(n, table)
}

fn build(family: &GroupFamily) -> Result<FiniteGroup, GroupError> {
    match family {
        GroupFamily::Cyclic(n) => {
            let n = *n;
            let table = (0..n * n).map(|x| ((x / n + x % n) % n) as u16).collect();
            FiniteGroup::from_flat(n, table)
        }
        GroupFamily::Dihedral(order) => {
            let m = order / 2;
            let n = *order;
            let mut table = Vec::with_capacity(n * n);
            for x in 0..n {
                let (fx, ix) = (x / m, x % m);
                for y in 0..n {
                    let (fy, iy) = (y / m, y % m);
                    // r^a s^f r^b s^h = r^(a + (-1)^f b) s^(f+h)
                    let i = if fx == 0 { (ix + iy) % m } else { (ix + m - iy) % m };
                    let f = (fx + fy) % 2;
                    table.push((f * m + i) as u16);
                }
            }
            FiniteGroup::from_flat(n, table)
        }
        GroupFamily::Symmetric(n) => group_from_perms(permutations_lex(*n)),
        GroupFamily::Alternating(n) => group_from_perms(
            permutations_lex(*n)
                .into_iter()
                .filter(|p| !permutation_parity(p))
                .collect(),
        ),
        GroupFamily::Quaternion8 => {
            // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; element = 2*unit + sign
            const UNIT: [[(usize, bool); 4]; 4] = [
                [(0, false), (1, false), (2, false), (3, false)],
                [(1, false), (0, true), (3, false), (2, true)],
                [(2, false), (3, true), (0, true), (1, false)],
                [(3, false), (2, false), (1, true), (0, true)],
            ];
            let mut table = Vec::with_capacity(64);
            for x in 0..8 {
                for y in 0..8 {
                    let (u, neg) = UNIT[x / 2][y / 2];
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    table.push((2 * u + sign as usize) as u16);
                }
            }
            FiniteGroup::from_flat(8, table)
        }
        GroupFamily::Product(a, b) => build(a)?.direct_product(&build(b)?),
    }
}

/// Generates the Cayley table of a catalogue group.
pub fn named_group(family: &GroupFamily) -> Result<FiniteGroup, GroupError> {
    let unsupported = |msg: String| Err(GroupError::UnsupportedSpec(msg));
    match family {
        GroupFamily::Cyclic(0) => return unsupported("cyclic group needs order >= 1".into()),
        GroupFamily::Dihedral(n) if *n < 2 || n % 2 == 1 => {
            return unsupported(format!("dihedral order must be even and >= 2, got {n}"))
        }
        GroupFamily::Symmetric(0) | GroupFamily::Alternating(0) => {
            return unsupported("permutation groups need n >= 1".into())
        }
        _ => {}
    }
    match family.order() {
        Some(o) if o <= MAX_ORDER => build(family),
        _ => unsupported(format!("group order exceeds the maximum {MAX_ORDER}")),
    }
}
