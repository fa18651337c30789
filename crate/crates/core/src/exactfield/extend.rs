use super::factor::is_irreducible;
use super::field::{Field, FieldElement};
use super::poly::UnivariatePoly;
use super::rational::Rational;
use super::roots::shift_sequence;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

const SHIFT_BOUND: usize = 41;

/// A field embedding `K → L`, determined by the image of the generator of `K`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    generator_image: FieldElement,
}

impl Embedding {
    pub fn identity(field: &Field) -> Self {
        Embedding { source: field.clone(), target: field.clone(), generator_image: field.generator() }
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn generator_image(&self) -> &FieldElement {
        &self.generator_image
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        if self.source == self.target {
            return a.clone();
        }
        assert!(a.field() == &self.source, "element of the wrong field");
        a.coords()
            .iter()
            .rev()
            .fold(self.target.zero(), |acc, c| &(&acc * &self.generator_image) + &self.target.from_rational(c.clone()))
    }

    pub fn apply_matrix(&self, m: &Matrix) -> Matrix {
        if self.source == self.target {
            return m.clone();
        }
        let applied = Matrix::from_fn(&self.target, m.rows(), m.cols(), |i, j| self.apply(m.get(i, j)));
        applied
    }

    pub fn apply_poly(&self, p: &UnivariatePoly) -> UnivariatePoly {
        UnivariatePoly::new(&self.target, p.coeffs().iter().map(|c| self.apply(c)).collect())
    }
}

/// `L = K[z]/(g)` presented by a single primitive element, with the embedding of
/// `K` and the image of `z` in `L`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Field,
    pub embedding: Embedding,
    pub root: FieldElement,
}

/// Adjoins a root of the monic irreducible `g ∈ K[z]`.
///
/// The primitive element is `γ = z + sθ` for the first shift `s` in
/// `0, 1, −1, 2, …` whose minimal polynomial over ℚ has full degree
/// `[K:ℚ]·deg g`; `θ` is then rewritten as a polynomial in `γ`.
pub fn extend_field(base: &Field, g: &UnivariatePoly) -> Result<Extension> {
    let e = match g.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Reducible(g.to_string())),
        Some(e) => e,
    };
    if !g.leading().is_one() {
        return Err(Error::NotMonic);
    }
    if e == 1 {
        return Ok(Extension {
            field: base.clone(),
            embedding: Embedding::identity(base),
            root: -&g.coeff(0),
        });
    }
    let d = base.degree();
    let n = d * e;
    let q = Field::rationals();
    let theta = base.generator();
    let z = UnivariatePoly::x(base);
    // ℚ-coordinates of an element of K[z]/(g), index j·d + i for θ^i z^j.
    let to_vec = |p: &UnivariatePoly| -> Vec<FieldElement> {
        let r = p.rem(g);
        let mut v = vec![q.zero(); n];
        for j in 0..e {
            for (i, c) in r.coeff(j).coords().iter().enumerate() {
                v[j * d + i] = q.from_rational(c.clone());
            }
        }
        v
    };
    let basis: Vec<UnivariatePoly> = (0..e)
        .flat_map(|j| {
            let zj = z_power(base, j);
            let theta = theta.clone();
            (0..d).map(move |i| zj.scale(&theta.pow(i as i64)))
        })
        .collect();
    for s in shift_sequence().take(SHIFT_BOUND) {
        let gamma = z.add(&UnivariatePoly::constant(&theta * &base.from_int(s)));
        let mult = Matrix::from_columns(&q, n, &basis.iter().map(|b| to_vec(&gamma.mul(b))).collect::<Vec<_>>());
        let charpoly = mult.charpoly().to_rational().unwrap();
        if !charpoly.is_squarefree() {
            continue;
        }
        if !is_irreducible(&charpoly) {
            return Err(Error::Reducible(g.to_string()));
        }
        // powers of γ as columns; solve for θ and z in that basis
        let mut powers = Vec::with_capacity(n);
        let mut acc = UnivariatePoly::one(base);
        for _ in 0..n {
            powers.push(to_vec(&acc));
            acc = acc.mul(&gamma).rem(g);
        }
        let pm = Matrix::from_columns(&q, n, &powers);
        let field = Field::new(charpoly)?;
        let express = |p: &UnivariatePoly| -> FieldElement {
            let c = pm.solve(&to_vec(p)).expect("γ generates L");
            field.element(c.iter().map(|x| x.to_rational().unwrap()).collect::<Vec<Rational>>())
        };
        let generator_image = express(&UnivariatePoly::constant(theta.clone()));
        let root = express(&z);
        return Ok(Extension {
            field: field.clone(),
            embedding: Embedding { source: base.clone(), target: field, generator_image },
            root,
        });
    }
    Err(Error::PrimitiveElementSearchFailed(SHIFT_BOUND as i64))
}

fn z_power(base: &Field, j: usize) -> UnivariatePoly {
    let mut c = vec![base.zero(); j + 1];
    c[j] = base.one();
    UnivariatePoly::new(base, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RationalPoly;

    #[test]
    fn adjoin_sqrt3_to_sqrt2() {
        let k = Field::quadratic(2).unwrap();
        let g = UnivariatePoly::from_rational(&k, &RationalPoly::from_ints(&[-3, 0, 1]));
        let ext = extend_field(&k, &g).unwrap();
        assert_eq!(ext.field.degree(), 4);
        let emb = &ext.embedding;
        let a = emb.apply(&k.generator());
        assert_eq!(&a * &a, ext.field.from_int(2));
        assert_eq!(&ext.root * &ext.root, ext.field.from_int(3));
        // homomorphism check on a sample
        let x = &k.generator() + &k.from_int(3);
        let y = &k.generator() * &k.from_int(-2);
        assert_eq!(emb.apply(&(&x * &y)), &emb.apply(&x) * &emb.apply(&y));
        // g splits over L
        let gl = emb.apply_poly(&g);
        assert_eq!(crate::exactfield::roots_in_field(&gl).unwrap().len(), 2);
    }

    #[test]
    fn adjoin_over_rationals_and_trivial_degree() {
        let q = Field::rationals();
        let g = UnivariatePoly::from_rational(&q, &RationalPoly::from_ints(&[1, 1, 1]));
        let ext = extend_field(&q, &g).unwrap();
        assert_eq!(ext.field.degree(), 2);
        assert!(ext.root.pow(3).is_one());
        let lin = UnivariatePoly::linear(&q.from_int(5));
        let ext = extend_field(&q, &lin).unwrap();
        assert_eq!(ext.root, q.from_int(5));
        let red = UnivariatePoly::from_rational(&q, &RationalPoly::from_ints(&[-1, 0, 1]));
        assert!(matches!(extend_field(&q, &red), Err(Error::Reducible(_))));
    }
}
