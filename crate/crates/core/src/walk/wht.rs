//! In-place fast Walsh-Hadamard transforms (unnormalized).

use std::ops::{Add, Sub};

/// `out[u] = sum_a (-1)^{a.u} data[a]`, length a power of two.
pub fn wht<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let n = data.len();
    assert!(n.is_power_of_two(), "WHT length must be a power of two");
    let mut h = 1;
    while h < n {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

pub(crate) fn wht_i32(data: &mut [i32]) {
    wht(data);
}
