//! Just enough double-double arithmetic to evaluate the Debye phase
//! √(x²−ν²) − ν·atan(√(x²−ν²)/ν) without losing the digits that cancel.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const PI_4: Dd = Dd { hi: 0.785_398_163_397_448_3, lo: 3.061_616_997_868_383e-17 };

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd { hi: p, lo: a.mul_add(b, -p) }
}

impl Dd {
    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let u = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(u.hi, u.lo + t.lo)
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn mul_f(self, b: f64) -> Dd {
        let p = two_prod(self.hi, b);
        quick_two_sum(p.hi, p.lo + self.lo * b)
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f(q2));
        let q3 = r.hi / o.hi;
        quick_two_sum(q1, q2).add(Dd::from(q3))
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from(0.0);
        }
        let s = self.hi.sqrt();
        let r = self.sub(two_prod(s, s));
        quick_two_sum(s, r.hi / (2.0 * s))
    }
}

/// sin and cos of a double by Taylor series in double-double; |t| ≤ 2.
fn sin_cos(t: f64) -> (Dd, Dd) {
    let t2 = two_prod(t, t);
    let mut term = Dd::from(t);
    let mut s = term;
    let mut k = 1.0;
    while term.hi.abs() > 1e-36 {
        term = term.mul(t2).div(Dd::from(-(k + 1.0) * (k + 2.0)));
        s = s.add(term);
        k += 2.0;
    }
    let mut term = Dd::from(1.0);
    let mut c = term;
    let mut k = 0.0;
    while term.hi.abs() > 1e-36 {
        term = term.mul(t2).div(Dd::from(-(k + 1.0) * (k + 2.0)));
        c = c.add(term);
        k += 2.0;
    }
    (s, c)
}

/// atan for y ≥ 0: one Newton correction of the libm value.
fn atan(y: Dd) -> Dd {
    let t0 = y.hi.atan();
    let (s, c) = sin_cos(t0);
    let tan0 = s.div(c);
    // atan(y) = t0 + (y − tan t0)/(1 + y²) + O(δ²)
    let delta = y.sub(tan0).hi / (1.0 + y.hi * y.hi);
    two_sum(t0, delta).add(Dd::from(0.0))
}

/// (w − ν·atan(w/ν), w) with w = √(x²−ν²), for x > ν > 0.
pub(crate) fn phase_excess(nu: f64, x: f64) -> (Dd, f64) {
    let w2 = two_prod(x, x).sub(two_prod(nu, nu));
    let w = w2.sqrt();
    let tau = w.div(Dd::from(nu));
    (w.sub(atan(tau).mul_f(nu)), w.hi)
}

/// w − ν·atan(w/ν) − π/4.
pub(crate) fn debye_phase(nu: f64, x: f64) -> Dd {
    phase_excess(nu, x).0.sub(PI_4)
}
