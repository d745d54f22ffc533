//! Arithmetic in `GF(p^d)`, elements encoded as base-`p` digit vectors.

#[derive(Debug, Clone)]
pub(crate) struct Field {
    pub(crate) p: usize,
    pub(crate) d: usize,
    /// Monic irreducible modulus, low coefficient first, length `d + 1`.
    modulus: Vec<usize>,
}

impl Field {
    pub(crate) fn new(p: usize, d: usize) -> Field {
        let modulus = (0..p.pow(d as u32))
            .map(|low| {
                let mut f = digits(low, p, d);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        Field { p, d, modulus }
    }

    pub(crate) fn size(&self) -> usize {
        self.p.pow(self.d as u32)
    }

    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (digits(a, self.p, self.d), digits(b, self.p, self.d));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&sum, self.p)
    }

    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (digits(a, self.p, self.d), digits(b, self.p, self.d));
        let mut prod = vec![0; 2 * self.d];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(&prod, &self.modulus, self.p);
        undigits(&rem[..self.d], self.p)
    }

    pub(crate) fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// A generator of the multiplicative group.
    pub(crate) fn primitive_element(&self) -> usize {
        let q = self.size();
        (2..q)
            .find(|&g| {
                let mut x = 1;
                (1..q - 1).all(|_| {
                    x = self.mul(x, g);
                    x != 1
                })
            })
            .unwrap_or(1)
    }
}

pub(crate) fn digits(mut v: usize, p: usize, d: usize) -> Vec<usize> {
    (0..d)
        .map(|_| {
            let r = v % p;
            v /= p;
            r
        })
        .collect()
}

pub(crate) fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn inverse_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&x| a * x % p == 1).expect("p is prime")
}

/// Remainder of `a` modulo `m`, padded to `a`'s length.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = inverse_mod(m[dm], p);
    for i in (dm..r.len()).rev() {
        let c = r[i] * lead_inv % p;
        if c == 0 {
            continue;
        }
        for (j, &mj) in m.iter().enumerate() {
            let idx = i - dm + j;
            r[idx] = (r[idx] + p * p - c * mj % p) % p;
        }
    }
    r
}

/// No monic factor of degree `1..=deg/2`.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for k in 1..=deg / 2 {
        for low in 0..p.pow(k as u32) {
            let mut g = digits(low, p, k);
            g.push(1);
            if poly_rem(f, &g, p)[..k].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
