#![allow(dead_code)]

use wigner_moments::annular::AnnulusShape;

/// Ordered compositions of every total in `1..=max_total` with at most `max_parts` parts.
pub fn compositions(max_total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, left: usize, max_parts: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_parts {
            return;
        }
        for k in 1..=left {
            prefix.push(k);
            grow(prefix, left - k, max_parts, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_total {
        grow(&mut Vec::new(), total, max_parts, &mut out);
    }
    out
}

pub fn shape(orders: &[usize]) -> AnnulusShape {
    AnnulusShape::new(orders.to_vec()).unwrap()
}

pub fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
