//! The `SL₂` action on `H_{t,c}` and the grading element.

use super::pbw::{Cherednik, PbwElement};
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::report::CheckReport;

/// `[[p, q], [r, s]]` acting by `x ↦ p x + q ŷ`, `y ↦ r x̂ + s y`, where the
/// hats transport through the invariant inner product.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2<F> {
    pub p: F,
    pub q: F,
    pub r: F,
    pub s: F,
}

impl<F: Field> Sl2<F> {
    pub fn new(p: F, q: F, r: F, s: F) -> Result<Self> {
        let det = p.clone() * &s - q.clone() * &r;
        if det != F::one() {
            return Err(Error::NotUnimodular(format!("determinant {det}")));
        }
        Ok(Self { p, q, r, s })
    }

    pub fn identity() -> Self {
        Self { p: F::one(), q: F::zero(), r: F::zero(), s: F::one() }
    }

    /// `[[0, 1], [−1, 0]]`.
    pub fn fourier() -> Self {
        Self { p: F::zero(), q: F::one(), r: -F::one(), s: F::zero() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            p: self.p.clone() * &o.p + self.q.clone() * &o.r,
            q: self.p.clone() * &o.q + self.q.clone() * &o.s,
            r: self.r.clone() * &o.p + self.s.clone() * &o.r,
            s: self.r.clone() * &o.q + self.s.clone() * &o.s,
        }
    }
}

/// Images of the generators under one matrix.
pub struct Sl2Action<'h, 'a, F> {
    h: &'h Cherednik<'a, F>,
    x_img: Vec<PbwElement<F>>,
    y_img: Vec<PbwElement<F>>,
}

impl<'h, 'a, F: Field> Sl2Action<'h, 'a, F> {
    pub fn new(h: &'h Cherednik<'a, F>, a: &Sl2<F>) -> Self {
        let w = h.group();
        let (g, gi) = (w.gram(), w.gram_inv());
        let l = h.dim();
        let x_img = (0..l)
            .map(|i| h.x(i).scale(&a.p).add(&h.y_form(&gi[i]).scale(&a.q)))
            .collect();
        let y_img = (0..l)
            .map(|i| h.x_form(&g[i]).scale(&a.r).add(&h.y(i).scale(&a.s)))
            .collect();
        Self { h, x_img, y_img }
    }

    fn power_product(&self, imgs: &[PbwElement<F>], e: &[u32], mut acc: PbwElement<F>) -> Result<PbwElement<F>> {
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                acc = self.h.mul(&acc, &imgs[i])?;
            }
        }
        Ok(acc)
    }

    pub fn apply(&self, u: &PbwElement<F>) -> Result<PbwElement<F>> {
        let h = self.h;
        let l = h.dim();
        let mut out = PbwElement::zero(h.nvars());
        for ((g, m), f) in u.terms() {
            let gy = self.power_product(&self.y_img, m, h.group_element(*g))?;
            for (n, scalar) in f.split_leading(l) {
                let term = self.power_product(&self.x_img, &n, gy.clone())?;
                out = out.add(&term.mul_poly(&scalar));
            }
        }
        Ok(out)
    }
}

pub fn sl2_automorphism<F: Field>(h: &Cherednik<'_, F>, a: &Sl2<F>, u: &PbwElement<F>) -> Result<PbwElement<F>> {
    Sl2Action::new(h, a).apply(u)
}

/// `𝐡 = Σ x_i y_i + tℓ/2 − Σ_s c_s s`.
pub fn grading_element<F: Field>(h: &Cherednik<'_, F>) -> Result<PbwElement<F>> {
    let w = h.group();
    let l = h.dim();
    let mut e = h.scalar(h.t().scale(&(F::from_i64(l as i64) / F::from_i64(2))));
    for i in 0..l {
        e = e.add(&h.mul(&h.x(i), &h.y(i))?);
    }
    for (s, r) in w.reflections().iter().enumerate() {
        e = e.sub(&h.group_element(r.element).mul_poly(&h.weights()[s]));
    }
    Ok(e)
}

/// `E = ½ Σ G_ij x_i x_j`, `F = −½ Σ G⁻¹_ij y_i y_j`.
pub fn sl2_triple_ef<F: Field>(h: &Cherednik<'_, F>) -> Result<(PbwElement<F>, PbwElement<F>)> {
    let w = h.group();
    let half = F::one() / F::from_i64(2);
    let mut e = PbwElement::zero(h.nvars());
    let mut f = PbwElement::zero(h.nvars());
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            e = e.add(&h.mul(&h.x(i), &h.x(j))?.scale(&(w.gram()[i][j].clone() * &half)));
            f = f.sub(&h.mul(&h.y(i), &h.y(j))?.scale(&(w.gram_inv()[i][j].clone() * &half)));
        }
    }
    Ok((e, f))
}

/// Checks on the grading element: `[𝐡, x] = t x`, `[𝐡, y] = −t y`,
/// W-invariance, and the triple `[𝐡,E] = 2tE`, `[𝐡,F] = −2tF`, `[E,F] = t𝐡`.
pub fn grading_report<F: Field>(h: &Cherednik<'_, F>) -> CheckReport {
    let mut rep = CheckReport::new(format!("grading-element {}", h.group().name()));
    let res = (|| -> Result<()> {
        let hh = grading_element(h)?;
        let t = h.t();
        for i in 0..h.dim() {
            let cx = h.commutator(&hh, &h.x(i))?;
            rep.record(cx == h.x(i).mul_poly(&t), || format!("[h, x{i}]"));
            let cy = h.commutator(&hh, &h.y(i))?;
            rep.record(cy == h.y(i).mul_poly(&-&t), || format!("[h, y{i}]"));
        }
        for g in 0..h.group().order() {
            let conj = h.product(&[h.group_element(g), hh.clone(), h.group_element(h.group().inverse(g))])?;
            rep.record(conj == hh, || format!("g{g} h g{g}^-1"));
        }
        let (e, f) = sl2_triple_ef(h)?;
        let two_t = t.scale(&F::from_i64(2));
        rep.record(h.commutator(&hh, &e)? == e.mul_poly(&two_t), || "[h, E]".into());
        rep.record(h.commutator(&hh, &f)? == f.mul_poly(&-&two_t), || "[h, F]".into());
        rep.record(h.commutator(&e, &f)? == hh.mul_poly(&t), || "[E, F]".into());
        Ok(())
    })();
    if let Err(e) = res {
        rep.fail(e.to_string());
    }
    rep
}

/// Automorphism property, identity, composition and `F² = (−1)^deg` on seeded words.
pub fn sl2_report<F: Field>(h: &Cherednik<'_, F>, seed: u64, samples: usize, max_len: usize) -> CheckReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("sl2-automorphism {}", h.group().name()));
    let int = |k: i64| F::from_i64(k);
    let a = Sl2::new(int(2), int(1), int(1), int(1)).expect("unimodular");
    let b = Sl2::new(int(1), int(0), int(-3), int(1)).expect("unimodular");
    let fa = Sl2Action::new(h, &a);
    let fb = Sl2Action::new(h, &b);
    let fba = Sl2Action::new(h, &b.mul(&a));
    let id = Sl2Action::new(h, &Sl2::identity());
    let four = Sl2Action::new(h, &Sl2::fourier());
    for _ in 0..samples {
        let wu = h.random_word(&mut rng, max_len);
        let wv = h.random_word(&mut rng, max_len);
        let res = (|| -> Result<[bool; 4]> {
            let (u, v) = (h.word(&wu)?, h.word(&wv)?);
            let hom = fa.apply(&h.mul(&u, &v)?)? == h.mul(&fa.apply(&u)?, &fa.apply(&v)?)?;
            let ident = id.apply(&u)? == u;
            // φ_A ∘ φ_B = φ_{BA}
            let comp = fa.apply(&fb.apply(&u)?)? == fba.apply(&u)?;
            let sign = if wu.iter().filter(|g| !matches!(g, super::pbw::Generator::G(_))).count() % 2 == 0 { int(1) } else { int(-1) };
            let sq = four.apply(&four.apply(&u)?)? == u.scale(&sign);
            Ok([hom, ident, comp, sq])
        })();
        match res {
            Ok(flags) => {
                for (k, ok) in flags.into_iter().enumerate() {
                    rep.record(ok, || format!("{wu:?} {wv:?} property {k}"));
                }
            }
            Err(e) => rep.fail(format!("{wu:?}: {e}")),
        }
    }
    rep
}

/// Top filtration part of `F(g y^m x^n)` is `(−1)^{|m|} g y^n x^m` (orthonormal coordinates).
pub fn fourier_swaps_degrees<F: Field>(h: &Cherednik<'_, F>, max_deg: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("fourier-swap {}", h.group().name()));
    let l = h.dim();
    let four = Sl2Action::new(h, &Sl2::fourier());
    for d in 0..=max_deg {
        for e in crate::exact::monomials_of_degree(2 * l, d) {
            let (m, n) = (&e[..l], &e[l..]);
            for g in 0..h.group().order() {
                let img = four.apply(&h.basis(g, m, n));
                let ok = img.is_ok_and(|img| {
                    let mut top = PbwElement::zero(h.nvars());
                    for ((g2, m2), f) in img.terms() {
                        let my = m2.iter().sum::<u32>();
                        let hd = f.homogeneous_part(0..l, d.saturating_sub(my));
                        if my <= d {
                            top.add_term((*g2, m2.clone()), hd);
                        }
                    }
                    let sign = if m.iter().sum::<u32>() % 2 == 0 { F::one() } else { -F::one() };
                    top == h.basis(g, n, m).scale(&sign)
                });
                rep.record(ok, || format!("g{g} y^{m:?} x^{n:?}"));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::ReflectionGroup;
    use crate::exact::{qi, Q};

    #[test]
    fn not_unimodular() {
        assert!(matches!(Sl2::new(qi(2), qi(0), qi(0), qi(1)), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn z2_grading_element() {
        let w = ReflectionGroup::<Q>::z2();
        let h = Cherednik::new(&w);
        let hh = grading_element(&h).unwrap();
        // xy = yx − [y,x] = y·x − t + 2c s, so 𝐡 = y x − t/2 + c s in normal order
        let mut expect = h.basis(0, &[1], &[1]);
        expect = expect.sub(&h.scalar(h.t().scale(&crate::exact::q(1, 2))));
        expect = expect.add(&h.group_element(1).mul_poly(&h.param(0)));
        assert_eq!(hh, expect);
        assert_eq!(h.commutator(&hh, &h.x(0)).unwrap(), h.x(0).mul_poly(&h.t()));
    }

    #[test]
    fn grading_and_triple() {
        for w in [ReflectionGroup::<Q>::z2(), ReflectionGroup::symmetric(3).unwrap(), ReflectionGroup::hyperoctahedral(2).unwrap(), ReflectionGroup::dihedral(6).unwrap()] {
            let h = Cherednik::new(&w);
            let r = grading_report(&h);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn sl2_properties() {
        let w = ReflectionGroup::<Q>::z2();
        let h = Cherednik::new(&w);
        let r = sl2_report(&h, 1, 25, 4);
        assert!(r.passed(), "{r:?}");
        let r = fourier_swaps_degrees(&h, 4);
        assert!(r.passed(), "{r:?}");
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let h = Cherednik::new(&w);
        let r = sl2_report(&h, 2, 6, 3);
        assert!(r.passed(), "{r:?}");
        let r = fourier_swaps_degrees(&h, 2);
        assert!(r.passed(), "{r:?}");
    }
}
