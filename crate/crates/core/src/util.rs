use alloc::vec::Vec;

/// Union-find over `0..n` with path halving.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are stable
            if ra < rb {
                self.parent[rb] = ra;
            } else {
                self.parent[ra] = rb;
            }
        }
    }
}

/// `x^e` for a small nonnegative integer exponent.
#[inline]
pub(crate) fn powi(x: f64, e: usize) -> f64 {
    let mut acc = 1.0;
    for _ in 0..e {
        acc *= x;
    }
    acc
}

#[inline]
pub(crate) fn root(x: f64, degree: usize) -> f64 {
    match degree {
        1 => x,
        2 => libm::sqrt(x),
        3 => libm::cbrt(x),
        d => libm::pow(x, 1.0 / d as f64),
    }
}
