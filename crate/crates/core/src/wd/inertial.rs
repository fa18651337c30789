use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactfield::{Embedding, Field};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertialElement {
    pub label: String,
    pub matrix: Matrix,
}

/// The image of a finite inertia quotient: distinct labeled matrices closed under
/// multiplication, together with the Frobenius twist `σ` as a permutation of the
/// labels.
///
/// The group law is read off from the matrices, so `τ` is a homomorphism by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertialData {
    elements: Vec<InertialElement>,
    sigma: Vec<usize>,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl InertialData {
    /// The trivial group acting by the identity.
    pub fn trivial(field: &Field, n: usize) -> Self {
        InertialData {
            elements: vec![InertialElement { label: "1".into(), matrix: Matrix::identity(field, n) }],
            sigma: vec![0],
            identity: 0,
            table: vec![vec![0]],
        }
    }

    /// `sigma` maps labels to labels; omitted labels are fixed.
    pub fn new(elements: Vec<InertialElement>, sigma: &HashMap<String, String>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidInertialData(m));
        if elements.is_empty() {
            return bad("no elements".into());
        }
        let n = elements[0].matrix.rows();
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.label.as_str(), i)).collect();
        if index.len() != elements.len() {
            return bad("labels must be distinct".into());
        }
        for (i, e) in elements.iter().enumerate() {
            if e.matrix.rows() != n || e.matrix.cols() != n {
                return bad(format!("{} has the wrong size", e.label));
            }
            if !e.matrix.is_invertible() {
                return bad(format!("{} is not invertible", e.label));
            }
            if elements[..i].iter().any(|o| o.matrix == e.matrix) {
                return bad(format!("{} repeats an earlier matrix", e.label));
            }
        }
        let find = |m: &Matrix| elements.iter().position(|e| &e.matrix == m);
        let Some(identity) = elements.iter().position(|e| e.matrix.is_identity()) else {
            return bad("identity matrix missing".into());
        };
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                match find(&(&a.matrix * &b.matrix)) {
                    Some(k) => table[i][j] = k,
                    None => return bad(format!("product {}·{} is not listed", a.label, b.label)),
                }
            }
        }
        // a finite set of invertible matrices closed under products is a group
        let mut perm: Vec<usize> = (0..elements.len()).collect();
        for (from, to) in sigma {
            let (Some(&f), Some(&t)) = (index.get(from.as_str()), index.get(to.as_str())) else {
                return bad(format!("sigma mentions an unknown label ({from} -> {to})"));
            };
            perm[f] = t;
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if seen[p] {
                return bad("sigma is not a permutation".into());
            }
            seen[p] = true;
        }
        for i in 0..perm.len() {
            for j in 0..perm.len() {
                if perm[table[i][j]] != table[perm[i]][perm[j]] {
                    return bad("sigma is not a group automorphism".into());
                }
            }
        }
        Ok(InertialData { elements, sigma: perm, identity, table })
    }

    pub fn elements(&self) -> &[InertialElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.elements.iter().map(|e| e.matrix.clone()).collect()
    }

    pub fn identity_label(&self) -> &str {
        &self.elements[self.identity].label
    }

    /// Index of `σ(γ)` for the element at index `i`.
    pub fn sigma(&self, i: usize) -> usize {
        self.sigma[i]
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Non-identity entries of `σ` as label pairs.
    pub fn sigma_map(&self) -> Vec<(String, String)> {
        (0..self.len())
            .filter(|&i| self.sigma[i] != i)
            .map(|i| (self.elements[i].label.clone(), self.elements[self.sigma[i]].label.clone()))
            .collect()
    }

    /// The order of `σ` as a permutation.
    pub fn sigma_order(&self) -> usize {
        let mut order = 1usize;
        for start in 0..self.len() {
            let mut len = 1;
            let mut i = self.sigma[start];
            while i != start {
                i = self.sigma[i];
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    pub fn base_change(&self, embedding: &Embedding) -> Self {
        let elements = self
            .elements
            .iter()
            .map(|e| InertialElement { label: e.label.clone(), matrix: embedding.apply_matrix(&e.matrix) })
            .collect();
        InertialData { elements, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_group() -> Vec<InertialElement> {
        let k = Field::rationals();
        let r = Matrix::from_ints(&k, &[&[0, -1], &[1, -1]]);
        vec![
            InertialElement { label: "e".into(), matrix: Matrix::identity(&k, 2) },
            InertialElement { label: "r".into(), matrix: r.clone() },
            InertialElement { label: "r2".into(), matrix: r.pow(2) },
        ]
    }

    #[test]
    fn cyclic_three_with_inversion() {
        let sigma: HashMap<String, String> =
            [("r".to_string(), "r2".to_string()), ("r2".to_string(), "r".to_string())].into_iter().collect();
        let data = InertialData::new(rotation_group(), &sigma).unwrap();
        assert_eq!(data.sigma_order(), 2);
        assert_eq!(data.identity_label(), "e");
        let id = InertialData::new(rotation_group(), &HashMap::new()).unwrap();
        assert_eq!(id.sigma_order(), 1);
    }

    #[test]
    fn rejects_bad_data() {
        let mut els = rotation_group();
        els.pop();
        assert!(InertialData::new(els, &HashMap::new()).is_err());
        let sigma: HashMap<String, String> = [("r".to_string(), "e".to_string())].into_iter().collect();
        assert!(InertialData::new(rotation_group(), &sigma).is_err());
    }
}
