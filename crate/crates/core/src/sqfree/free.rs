//! Free squarefree modules, minimal covers, kernels and minimal free resolutions.

use super::module::{Morphism, SquarefreeModule};
use super::SqfreeError;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::subset::Subset;

/// `⊕_k R(-F_k)` seen in squarefree degrees: the component at `G` is spanned
/// by the generators `k` with `F_k ⊆ G`, in generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSquarefree {
    n: usize,
    shifts: Vec<Subset>,
}

impl FreeSquarefree {
    pub fn new(n: usize, shifts: Vec<Subset>) -> Self {
        assert!(shifts.iter().all(|s| s.is_subset_of(Subset::full(n))));
        FreeSquarefree { n, shifts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shifts(&self) -> &[Subset] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Generators alive in degree `g`.
    pub fn basis_at(&self, g: Subset) -> Vec<usize> {
        (0..self.shifts.len())
            .filter(|&k| self.shifts[k].is_subset_of(g))
            .collect()
    }

    /// The poset representation with inclusion-induced 0/1 transition maps.
    pub fn to_module<F: Field>(&self, field: F) -> SquarefreeModule<F> {
        let n = self.n;
        let dims = (0..1u32 << n)
            .map(|b| self.basis_at(Subset::from_bits(b)).len())
            .collect();
        SquarefreeModule::build(field, n, dims, |face, j| self.inclusion(field, face, face.with(j)))
            .expect("free modules are functorial")
    }

    /// Inclusion of the degree-`from` basis into the degree-`to` basis.
    fn inclusion<F: Field>(&self, field: F, from: Subset, to: Subset) -> Matrix<F> {
        let src = self.basis_at(from);
        let dst = self.basis_at(to);
        let mut m = Matrix::zero(field, dst.len(), src.len());
        for (c, k) in src.iter().enumerate() {
            let r = dst.binary_search(k).expect("from ⊆ to");
            m[(r, c)] = field.one();
        }
        m
    }

    /// Multiset of shifts as `(F, multiplicity)` in generator order.
    pub fn shift_counts(&self) -> Vec<(Subset, usize)> {
        let mut out: Vec<(Subset, usize)> = Vec::new();
        for &s in &self.shifts {
            match out.iter_mut().find(|(t, _)| *t == s) {
                Some((_, c)) => *c += 1,
                None => out.push((s, 1)),
            }
        }
        out
    }
}

/// Generators in increasing degree together with their lifts `v ∈ M_F`.
pub(crate) fn generator_lifts<F: Field>(module: &SquarefreeModule<F>) -> Vec<(Subset, Vec<F::Elem>)> {
    let field = module.field();
    let mut out = Vec::new();
    for face in Subset::all_graded(module.n()) {
        let d = module.dim(face);
        if d == 0 {
            continue;
        }
        let incoming: Vec<Vec<F::Elem>> = face
            .positions()
            .flat_map(|j| {
                let m = module.map(face.without(j), j);
                (0..m.cols()).map(move |c| m.column(c))
            })
            .collect();
        let image = Subspace::span(field, d, incoming);
        for c in image.complement_indices() {
            let mut v = vec![field.zero(); d];
            v[c] = field.one();
            out.push((face, v));
        }
    }
    out
}

/// Degrees of minimal generators with multiplicities:
/// `dim M_F - dim Σ_{j ∈ F} x_j M_{F∖j}` at each `F`.
pub fn minimal_generators<F: Field>(module: &SquarefreeModule<F>) -> Vec<(Subset, usize)> {
    FreeSquarefree::new(
        module.n(),
        generator_lifts(module).into_iter().map(|(f, _)| f).collect(),
    )
    .shift_counts()
}

/// Minimal free cover `P → M`, surjective in every degree.
pub fn free_cover<F: Field>(module: &SquarefreeModule<F>) -> (FreeSquarefree, Morphism<F>) {
    let field = module.field();
    let lifts = generator_lifts(module);
    let free = FreeSquarefree::new(module.n(), lifts.iter().map(|(f, _)| *f).collect());
    let components = (0..1u32 << module.n())
        .map(|b| {
            let g = Subset::from_bits(b);
            let columns: Vec<Vec<F::Elem>> = free
                .basis_at(g)
                .into_iter()
                .map(|k| {
                    let (shift, v) = &lifts[k];
                    module.transition(*shift, g).mul_vec(v)
                })
                .collect();
            Matrix::from_columns(field, module.dim(g), &columns)
        })
        .collect();
    (free, Morphism::new(components))
}

/// Degreewise kernel of `phi : source → target` with its inclusion into `source`.
pub fn kernel<F: Field>(
    source: &SquarefreeModule<F>,
    target: &SquarefreeModule<F>,
    phi: &Morphism<F>,
) -> Result<(SquarefreeModule<F>, Morphism<F>), SqfreeError> {
    phi.check(source, target)?;
    let field = source.field();
    let n = source.n();
    let kernels: Vec<Subspace<F>> = (0..1u32 << n)
        .map(|b| Subspace::kernel_of(phi.component(Subset::from_bits(b))))
        .collect();
    let dims = kernels.iter().map(Subspace::dim).collect();
    let module = SquarefreeModule::build(field, n, dims, |face, j| {
        let (from, to) = (&kernels[face.index()], &kernels[face.with(j).index()]);
        let map = source.map(face, j);
        let columns: Vec<Vec<F::Elem>> = (0..from.dim())
            .map(|i| to.coordinates(&map.mul_vec(from.basis_vector(i))))
            .collect();
        Matrix::from_columns(field, to.dim(), &columns)
    })?;
    let inclusion = Morphism::new(
        kernels
            .iter()
            .map(|k| {
                let cols: Vec<Vec<F::Elem>> = (0..k.dim()).map(|i| k.basis_vector(i).to_vec()).collect();
                Matrix::from_columns(field, k.ambient(), &cols)
            })
            .collect(),
    );
    Ok((module, inclusion))
}

/// `0 ← M ← P_0 ← P_1 ← ... ← P_len ← 0`, minimal.
///
/// `differentials[k - 1]` is `d_k : P_k → P_{k-1}` as a scalar matrix with rows
/// indexed by generators of `P_{k-1}` and columns by generators of `P_k`; entry
/// `(l, m)` can be nonzero only when the shift of `l` is contained in that of `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeResolution<F: Field> {
    n: usize,
    field: F,
    modules: Vec<FreeSquarefree>,
    differentials: Vec<Matrix<F>>,
}

impl<F: Field> FreeResolution<F> {
    pub fn modules(&self) -> &[FreeSquarefree] {
        &self.modules
    }

    pub fn differentials(&self) -> &[Matrix<F>] {
        &self.differentials
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> F {
        self.field
    }

    /// Projective dimension; `None` for the resolution of the zero module.
    pub fn length(&self) -> Option<usize> {
        self.modules.len().checked_sub(1)
    }

    /// Graded Betti numbers `β_{i,F}` as `(i, F, count)`.
    pub fn betti_numbers(&self) -> Vec<(usize, Subset, usize)> {
        self.modules
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.shift_counts().into_iter().map(move |(f, c)| (i, f, c)))
            .collect()
    }

    pub fn total_betti(&self) -> Vec<usize> {
        self.modules.iter().map(FreeSquarefree::rank).collect()
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// No nonzero entry joins two generators of the same shift.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().enumerate().all(|(k, d)| {
            let (lower, upper) = (&self.modules[k], &self.modules[k + 1]);
            (0..d.rows()).all(|r| {
                (0..d.cols()).all(|c| {
                    lower.shifts()[r] != upper.shifts()[c] || self.field.is_zero(&d[(r, c)])
                })
            })
        })
    }

    /// Differentials respect the shift-containment support rule.
    pub fn respects_shifts(&self) -> bool {
        self.differentials.iter().enumerate().all(|(k, d)| {
            let (lower, upper) = (&self.modules[k], &self.modules[k + 1]);
            (0..d.rows()).all(|r| {
                (0..d.cols()).all(|c| {
                    lower.shifts()[r].is_subset_of(upper.shifts()[c]) || self.field.is_zero(&d[(r, c)])
                })
            })
        })
    }
}

/// Minimal free resolution by iterated minimal covers of kernels.
pub fn free_resolution<F: Field>(module: &SquarefreeModule<F>) -> Result<FreeResolution<F>, SqfreeError> {
    let field = module.field();
    let n = module.n();
    let mut resolution = FreeResolution {
        n,
        field,
        modules: Vec::new(),
        differentials: Vec::new(),
    };
    if module.is_zero() {
        return Ok(resolution);
    }
    let (p0, mut cover) = free_cover(module);
    let mut target = module.clone();
    let mut current = p0.to_module(field);
    resolution.modules.push(p0);
    loop {
        let (syzygies, inclusion) = kernel(&current, &target, &cover)?;
        if syzygies.is_zero() {
            break;
        }
        if resolution.modules.len() > n {
            return Err(SqfreeError::ResolutionTooLong(n));
        }
        let lifts = generator_lifts(&syzygies);
        let next = FreeSquarefree::new(n, lifts.iter().map(|(f, _)| *f).collect());
        let previous = resolution.modules.last().expect("nonempty");
        let mut d = Matrix::zero(field, previous.rank(), next.rank());
        for (c, (shift, v)) in lifts.iter().enumerate() {
            let image = inclusion.component(*shift).mul_vec(v);
            for (pos, row) in previous.basis_at(*shift).into_iter().enumerate() {
                d[(row, c)] = image[pos].clone();
            }
        }
        resolution.differentials.push(d);
        let (_, next_cover) = free_cover(&syzygies);
        current = next.to_module(field);
        resolution.modules.push(next);
        target = syzygies;
        cover = next_cover;
    }
    Ok(resolution)
}

/// `depth M = n - pd M` (Auslander-Buchsbaum).
pub fn depth<F: Field>(module: &SquarefreeModule<F>) -> Result<usize, SqfreeError> {
    let res = free_resolution(module)?;
    let len = res.length().ok_or(SqfreeError::ZeroModule)?;
    Ok(module.n() - len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::simplicial::SimplicialComplex;
    use crate::sqfree::sr_module;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap()
    }

    #[test]
    fn free_module_generators_are_its_shifts() {
        let f = PrimeField::new(7).unwrap();
        let shifts = vec![Subset::EMPTY, Subset::from_elements([1, 2]), Subset::from_elements([1, 2]), Subset::from_elements([3])];
        let free = FreeSquarefree::new(3, shifts.clone());
        let m = free.to_module(f);
        let mut gens = minimal_generators(&m);
        gens.sort_by_key(|(s, _)| (s.len(), s.bits()));
        assert_eq!(
            gens,
            vec![
                (Subset::EMPTY, 1),
                (Subset::from_elements([3]), 1),
                (Subset::from_elements([1, 2]), 2)
            ]
        );
        let res = free_resolution(&m).unwrap();
        assert_eq!(res.length(), Some(0));
        assert_eq!(depth(&m).unwrap(), 3);
    }

    #[test]
    fn stanley_reisner_ring_is_cyclic() {
        let m = sr_module(&hollow_triangle(), Rationals);
        assert_eq!(minimal_generators(&m), vec![(Subset::EMPTY, 1)]);
    }

    #[test]
    fn cover_is_surjective() {
        let m = sr_module(&hollow_triangle(), Rationals);
        let (free, eps) = free_cover(&m);
        let pm = free.to_module(Rationals);
        eps.check(&pm, &m).unwrap();
        for b in 0..8u32 {
            let g = Subset::from_bits(b);
            assert_eq!(eps.component(g).rank(), m.dim(g));
        }
    }

    #[test]
    fn kernel_of_hollow_triangle_cover() {
        // K[Δ] = R / (x1 x2 x3): the kernel of R → K[Δ] lives only in degree {1,2,3}
        let m = sr_module(&hollow_triangle(), Rationals);
        let (free, eps) = free_cover(&m);
        let (k, incl) = kernel(&free.to_module(Rationals), &m, &eps).unwrap();
        for b in 0..8u32 {
            let g = Subset::from_bits(b);
            // rank-nullity: 1 - dim K[Δ]_G
            assert_eq!(k.dim(g), 1 - m.dim(g));
        }
        assert_eq!(minimal_generators(&k), vec![(Subset::full(3), 1)]);
        incl.check(&k, &free.to_module(Rationals)).unwrap();
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let m = sr_module(&hollow_triangle(), Rationals);
        let (k, _) = kernel(&m, &m, &Morphism::identity(&m)).unwrap();
        assert!(k.is_zero());
        let (k, _) = kernel(&m, &m, &Morphism::zero(&m, &m)).unwrap();
        assert_eq!(k.dims(), m.dims());
    }

    #[test]
    fn principal_ideal_resolution() {
        let m = sr_module(&hollow_triangle(), Rationals);
        let res = free_resolution(&m).unwrap();
        assert_eq!(res.length(), Some(1));
        assert_eq!(
            res.betti_numbers(),
            vec![(0, Subset::EMPTY, 1), (1, Subset::full(3), 1)]
        );
        assert_eq!(depth(&m).unwrap(), 2);
        assert!(res.is_complex() && res.is_minimal() && res.respects_shifts());
    }

    #[test]
    fn zero_module_has_no_depth() {
        let z = SquarefreeModule::zero(Rationals, 2);
        assert_eq!(free_resolution(&z).unwrap().length(), None);
        assert_eq!(depth(&z), Err(SqfreeError::ZeroModule));
    }
}
