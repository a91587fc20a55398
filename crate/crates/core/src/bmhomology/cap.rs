use crate::simplicial::{Chain, Cochain, Simplex};

/// Cap product: `a ∩ s = a(back q-face of s) · (front p-face of s)` for a
/// degree-q cochain and a simplex of degree `p + q`, extended linearly.
///
/// Front and back faces are taken in the sorted vertex order. A cochain of
/// degree above the chain degree gives the zero chain.
pub fn cap_product(a: &Cochain, c: &Chain) -> Chain {
    let q = a.degree();
    let n = c.degree();
    if q > n {
        return Chain::zero(0);
    }
    let p = n - q;
    let mut out = Chain::zero(p);
    for (s, coeff) in c.iter() {
        let v = s.vertices();
        let back = Simplex::new(v[p..].to_vec()).expect("faces of a simplex are simplices");
        let value = a.value(&back);
        if value == 0.into() {
            continue;
        }
        let front = Simplex::new(v[..=p].to_vec()).expect("faces of a simplex are simplices");
        out.add_term(front, value * coeff);
    }
    out
}
