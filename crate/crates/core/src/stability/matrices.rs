//! Small dense complex matrices (N <= 4) used by the stability analysis.

use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat<const N: usize> = [[C64; N]; N];

pub fn mat_identity<const N: usize>() -> CMat<N> {
    let mut m = [[C64::ZERO; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C64::ONE;
    }
    m
}

pub fn mat_mul<const N: usize>(a: &CMat<N>, b: &CMat<N>) -> CMat<N> {
    let mut out = [[C64::ZERO; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik != C64::ZERO {
                for j in 0..N {
                    out[i][j] += aik * b[k][j];
                }
            }
        }
    }
    out
}

pub fn mat_scale<const N: usize>(m: &CMat<N>, s: C64) -> CMat<N> {
    let mut out = *m;
    for row in &mut out {
        for v in row {
            *v *= s;
        }
    }
    out
}

pub fn mat_add_assign<const N: usize>(dst: &mut CMat<N>, src: &CMat<N>) {
    for (dr, sr) in dst.iter_mut().zip(src) {
        for (d, s) in dr.iter_mut().zip(sr) {
            *d += s;
        }
    }
}

pub fn mat_vec<const N: usize>(m: &CMat<N>, v: &[C64; N]) -> [C64; N] {
    let mut out = [C64::ZERO; N];
    for i in 0..N {
        for j in 0..N {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

pub fn trace<const N: usize>(m: &CMat<N>) -> C64 {
    (0..N).map(|i| m[i][i]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_multiplication() {
        let a: CMat<3> = [
            [C64::new(1.0, 2.0), C64::new(0.0, -1.0), C64::new(3.0, 0.0)],
            [C64::new(0.5, 0.0), C64::new(2.0, 2.0), C64::new(0.0, 0.0)],
            [C64::new(-1.0, 1.0), C64::new(0.0, 0.0), C64::new(1.0, -1.0)],
        ];
        let i = mat_identity::<3>();
        assert_eq!(mat_mul(&a, &i), a);
        assert_eq!(mat_mul(&i, &a), a);
    }
}
