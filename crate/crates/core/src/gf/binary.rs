//! Bit-packed polynomial arithmetic over F_2 (64 coefficients per word).

#[inline]
fn xor_shifted(acc: &mut [u64], src: &[u64], shift: usize) {
    let w = shift / 64;
    let b = shift % 64;
    if b == 0 {
        for (j, &s) in src.iter().enumerate() {
            acc[w + j] ^= s;
        }
    } else {
        for (j, &s) in src.iter().enumerate() {
            acc[w + j] ^= s << b;
            acc[w + j + 1] ^= s >> (64 - b);
        }
    }
}

/// Carry-less product; result has `a.len() + b.len() + 1` words.
pub(crate) fn clmul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() + 1];
    // 4-bit windows over `a` with precomputed multiples of `b`.
    let bl = b.len() + 1;
    let mut table = vec![0u64; 16 * bl];
    for k in 1..16usize {
        let row = &mut table[k * bl..(k + 1) * bl];
        for bit in 0..4 {
            if k >> bit & 1 == 1 {
                for (j, &s) in b.iter().enumerate() {
                    row[j] ^= s << bit;
                    if bit > 0 {
                        row[j + 1] ^= s >> (64 - bit);
                    }
                }
            }
        }
    }
    for (i, &aw) in a.iter().enumerate() {
        if aw == 0 {
            continue;
        }
        for nib in 0..16 {
            let k = ((aw >> (4 * nib)) & 0xf) as usize;
            if k == 0 {
                continue;
            }
            let row = &table[k * bl..(k + 1) * bl];
            xor_shifted(&mut out, row, i * 64 + 4 * nib);
        }
    }
    out
}

/// Interleaves zero bits: the square of a polynomial over F_2.
pub(crate) fn square(a: &[u64]) -> Vec<u64> {
    fn spread(x: u32) -> u64 {
        let mut x = x as u64;
        x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
        x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
        x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
        x = (x | (x << 2)) & 0x3333_3333_3333_3333;
        x = (x | (x << 1)) & 0x5555_5555_5555_5555;
        x
    }
    let mut out = vec![0u64; 2 * a.len() + 1];
    for (i, &w) in a.iter().enumerate() {
        out[2 * i] = spread(w as u32);
        out[2 * i + 1] = spread((w >> 32) as u32);
    }
    out
}

/// Reduction modulo a packed monic polynomial of degree `m`, eight bits at a time.
pub(crate) struct Reducer {
    m: usize,
    words: usize,
    modulus: Vec<u64>,
    table: Vec<Vec<u64>>,
}

impl Reducer {
    pub(crate) fn new(modulus: Vec<u64>, m: usize) -> Self {
        let words = m.div_ceil(64);
        let len = (m + 8).div_ceil(64) + 1;
        let table = (0..256u64)
            .map(|b| {
                let mut acc = vec![0u64; len + 1];
                let mut t = vec![0u64; len + 1];
                xor_shifted(&mut acc, &[b], m);
                for k in (m..m + 8).rev() {
                    if acc[k / 64] >> (k % 64) & 1 == 1 {
                        xor_shifted(&mut acc, &modulus, k - m);
                        xor_shifted(&mut t, &modulus, k - m);
                    }
                }
                t.truncate(len);
                t
            })
            .collect();
        Reducer {
            m,
            words,
            modulus,
            table,
        }
    }

    pub(crate) fn reduce(&self, mut acc: Vec<u64>) -> Vec<u64> {
        let m = self.m;
        let mut k = acc.len() * 64;
        acc.extend_from_slice(&[0, 0, 0]);
        while k >= m + 8 {
            let lo = k - 8;
            let (w, off) = (lo / 64, lo % 64);
            let mut b = acc[w] >> off;
            if off > 56 {
                b |= acc[w + 1] << (64 - off);
            }
            let b = (b & 0xff) as usize;
            if b != 0 {
                xor_shifted(&mut acc, &self.table[b], lo - m);
            }
            k = lo;
        }
        while k > m {
            k -= 1;
            if acc[k / 64] >> (k % 64) & 1 == 1 {
                xor_shifted(&mut acc, &self.modulus, k - m);
            }
        }
        acc.truncate(self.words);
        acc.resize(self.words, 0);
        acc
    }
}

pub(crate) fn pack(coeffs: &[u64], words: usize) -> Vec<u64> {
    let mut out = vec![0u64; words];
    for (i, &c) in coeffs.iter().enumerate() {
        if c & 1 == 1 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

pub(crate) fn unpack(words: &[u64], m: usize) -> Vec<u64> {
    (0..m).map(|i| words[i / 64] >> (i % 64) & 1).collect()
}
