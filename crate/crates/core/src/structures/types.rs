use std::sync::{Arc, OnceLock};

use crate::error::{HomError, Result};
use crate::exactlin::{Matrix, PowerCache, Scalar, Tensor3, Vector};

fn square_shape(what: &str, t: &Tensor3, n: usize) -> Result<()> {
    if t.shape() != (n, n, n) {
        return Err(HomError::DimensionMismatch(format!("{what} has shape {:?}, expected ({n}, {n}, {n})", t.shape())));
    }
    Ok(())
}

fn square_matrix(what: &str, m: &Matrix, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(HomError::DimensionMismatch(format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
    }
    Ok(())
}

fn powers(what: &str, alpha: Matrix) -> Result<Arc<PowerCache>> {
    PowerCache::new(alpha).map(Arc::new).map_err(|e| HomError::singular(what, e))
}

/// `(A, mu, alpha)` with unit `1_A`.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    mul: Tensor3,
    unit: Vector,
    powers: Arc<PowerCache>,
}

impl HomAlgebra {
    pub fn new(mul: Tensor3, unit: Vector, alpha: Matrix) -> Result<Self> {
        let n = unit.len();
        square_shape("multiplication", &mul, n)?;
        square_matrix("structure map", &alpha, n)?;
        Ok(HomAlgebra { mul, unit, powers: powers("structure map", alpha)? })
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mul(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn alpha(&self) -> &Matrix {
        self.powers.base()
    }

    /// `alpha^k`, memoized.
    pub fn pow(&self, k: i32) -> Arc<Matrix> {
        self.powers.get(k)
    }
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul && self.unit == other.unit && self.alpha() == other.alpha()
    }
}

/// `(C, Delta, epsilon, alpha)`.
#[derive(Clone, Debug)]
pub struct HomCoalgebra {
    comul: Tensor3,
    counit: Vector,
    powers: Arc<PowerCache>,
}

impl HomCoalgebra {
    pub fn new(comul: Tensor3, counit: Vector, alpha: Matrix) -> Result<Self> {
        let n = counit.len();
        square_shape("comultiplication", &comul, n)?;
        square_matrix("structure map", &alpha, n)?;
        Ok(HomCoalgebra { comul, counit, powers: powers("structure map", alpha)? })
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comul(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn alpha(&self) -> &Matrix {
        self.powers.base()
    }

    pub fn pow(&self, k: i32) -> Arc<Matrix> {
        self.powers.get(k)
    }
}

impl PartialEq for HomCoalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.comul == other.comul && self.counit == other.counit && self.alpha() == other.alpha()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(HomError::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.alpha() != coalgebra.alpha() {
            return Err(HomError::InvalidParameter("algebra and coalgebra structure maps differ".into()));
        }
        // Share one power cache between the two halves.
        let coalgebra = HomCoalgebra { powers: algebra.powers.clone(), ..coalgebra };
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn from_parts(mul: Tensor3, unit: Vector, comul: Tensor3, counit: Vector, alpha: Matrix) -> Result<Self> {
        let algebra = HomAlgebra::new(mul, unit, alpha)?;
        let coalgebra = HomCoalgebra { comul, counit, powers: algebra.powers.clone() };
        let n = algebra.dim();
        square_shape("comultiplication", &coalgebra.comul, n)?;
        if coalgebra.counit.len() != n {
            return Err(HomError::DimensionMismatch(format!(
                "counit has length {}, expected {n}",
                coalgebra.counit.len()
            )));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self) -> &Tensor3 {
        self.algebra.mul()
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn comul(&self) -> &Tensor3 {
        self.coalgebra.comul()
    }

    pub fn counit(&self) -> &Vector {
        self.coalgebra.counit()
    }

    pub fn alpha(&self) -> &Matrix {
        self.algebra.alpha()
    }

    pub fn pow(&self, k: i32) -> Arc<Matrix> {
        self.algebra.pow(k)
    }
}

/// A Hom-bialgebra together with a candidate antipode. Whether the antipode
/// axioms hold is a checker verdict, not a construction invariant.
#[derive(Clone, Debug)]
pub struct HomHopfAlgebra {
    bialgebra: HomBialgebra,
    antipode: Matrix,
    antipode_inverse: Arc<OnceLock<Option<Arc<Matrix>>>>,
}

impl HomHopfAlgebra {
    pub fn new(bialgebra: HomBialgebra, antipode: Matrix) -> Result<Self> {
        square_matrix("antipode", &antipode, bialgebra.dim())?;
        Ok(HomHopfAlgebra { bialgebra, antipode, antipode_inverse: Arc::new(OnceLock::new()) })
    }

    pub fn from_parts(
        mul: Tensor3,
        unit: Vector,
        comul: Tensor3,
        counit: Vector,
        alpha: Matrix,
        antipode: Matrix,
    ) -> Result<Self> {
        HomHopfAlgebra::new(HomBialgebra::from_parts(mul, unit, comul, counit, alpha)?, antipode)
    }

    pub fn bialgebra(&self) -> &HomBialgebra {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &HomAlgebra {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        self.bialgebra.coalgebra()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn mul(&self) -> &Tensor3 {
        self.bialgebra.mul()
    }

    pub fn unit(&self) -> &Vector {
        self.bialgebra.unit()
    }

    pub fn comul(&self) -> &Tensor3 {
        self.bialgebra.comul()
    }

    pub fn counit(&self) -> &Vector {
        self.bialgebra.counit()
    }

    pub fn alpha(&self) -> &Matrix {
        self.bialgebra.alpha()
    }

    pub fn pow(&self, k: i32) -> Arc<Matrix> {
        self.bialgebra.pow(k)
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Result<Arc<Matrix>> {
        let inv = self.antipode_inverse.get_or_init(|| self.antipode.inverse().ok().map(Arc::new));
        match inv {
            Some(m) => Ok(m.clone()),
            None => Err(HomError::Singular { what: "antipode".into(), rank: self.antipode.rank(), dim: self.dim() }),
        }
    }

    /// Same structure with a different antipode.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        HomHopfAlgebra::new(self.bialgebra.clone(), antipode)
    }
}

impl PartialEq for HomHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.bialgebra == other.bialgebra && self.antipode == other.antipode
    }
}

fn carrier_map(what: &str, alpha: Matrix, n: usize) -> Result<Arc<PowerCache>> {
    square_matrix(what, &alpha, n)?;
    powers(what, alpha)
}

/// Left action `h (x) m -> h . m` stored as `act[h][m][out]`, or a right
/// action `m (x) a -> m . a` stored as `act[m][a][out]`.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    act: Tensor3,
    carrier: Arc<PowerCache>,
}

impl ModuleAction {
    /// Left action of an algebra of dimension `act.0` on a carrier of
    /// dimension `act.1`.
    pub fn left(act: Tensor3, carrier_alpha: Matrix) -> Result<Self> {
        let (_, m, out) = act.shape();
        if m != out {
            return Err(HomError::DimensionMismatch(format!("left action has shape {:?}", act.shape())));
        }
        Ok(ModuleAction { carrier: carrier_map("carrier structure map", carrier_alpha, m)?, act })
    }

    /// Right action on a carrier of dimension `act.0`.
    pub fn right(act: Tensor3, carrier_alpha: Matrix) -> Result<Self> {
        let (m, _, out) = act.shape();
        if m != out {
            return Err(HomError::DimensionMismatch(format!("right action has shape {:?}", act.shape())));
        }
        Ok(ModuleAction { carrier: carrier_map("carrier structure map", carrier_alpha, m)?, act })
    }

    pub fn act(&self) -> &Tensor3 {
        &self.act
    }

    pub fn carrier_alpha(&self) -> &Matrix {
        self.carrier.base()
    }

    pub fn carrier_pow(&self, k: i32) -> Arc<Matrix> {
        self.carrier.get(k)
    }

    pub fn carrier_dim(&self) -> usize {
        self.act.shape().2
    }
}

impl PartialEq for ModuleAction {
    fn eq(&self, other: &Self) -> bool {
        self.act == other.act && self.carrier_alpha() == other.carrier_alpha()
    }
}

/// Right coaction `m -> m_(0) (x) m_(1)` stored as `coact[m][m0][m1]`, or a
/// left coaction `m -> m_(-1) (x) m_(0)` stored as `coact[m][m-1][m0]`.
#[derive(Clone, Debug)]
pub struct ComoduleCoaction {
    coact: Tensor3,
    carrier: Arc<PowerCache>,
}

impl ComoduleCoaction {
    pub fn right(coact: Tensor3, carrier_alpha: Matrix) -> Result<Self> {
        let (m, m0, _) = coact.shape();
        if m != m0 {
            return Err(HomError::DimensionMismatch(format!("right coaction has shape {:?}", coact.shape())));
        }
        Ok(ComoduleCoaction { carrier: carrier_map("carrier structure map", carrier_alpha, m)?, coact })
    }

    pub fn left(coact: Tensor3, carrier_alpha: Matrix) -> Result<Self> {
        let (m, _, m0) = coact.shape();
        if m != m0 {
            return Err(HomError::DimensionMismatch(format!("left coaction has shape {:?}", coact.shape())));
        }
        Ok(ComoduleCoaction { carrier: carrier_map("carrier structure map", carrier_alpha, m)?, coact })
    }

    pub fn coact(&self) -> &Tensor3 {
        &self.coact
    }

    pub fn carrier_alpha(&self) -> &Matrix {
        self.carrier.base()
    }

    pub fn carrier_pow(&self, k: i32) -> Arc<Matrix> {
        self.carrier.get(k)
    }

    pub fn carrier_dim(&self) -> usize {
        self.coact.shape().0
    }
}

impl PartialEq for ComoduleCoaction {
    fn eq(&self, other: &Self) -> bool {
        self.coact == other.coact && self.carrier_alpha() == other.carrier_alpha()
    }
}

/// Bilinear form `(-, -)` between two Hom-Hopf algebras,
/// `gram[i][j] = (e_i, f_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingForm {
    pub left: HomHopfAlgebra,
    pub right: HomHopfAlgebra,
    pub gram: Matrix,
}

impl PairingForm {
    pub fn new(left: HomHopfAlgebra, right: HomHopfAlgebra, gram: Matrix) -> Result<Self> {
        if gram.rows() != left.dim() || gram.cols() != right.dim() {
            return Err(HomError::DimensionMismatch(format!(
                "pairing is {}x{}, algebras have dimensions {} and {}",
                gram.rows(),
                gram.cols(),
                left.dim(),
                right.dim()
            )));
        }
        if !gram.is_invertible() {
            return Err(HomError::Singular { what: "pairing".into(), rank: gram.rank(), dim: left.dim() });
        }
        Ok(PairingForm { left, right, gram })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = HomError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(HomError::InvalidParameter(format!("side must be left or right, got {other:?}"))),
        }
    }
}

/// Bilinear form `sigma` on a Hom-bialgebra, `gram[i][j] = sigma(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCocycle {
    pub gram: Matrix,
    pub side: Side,
}

impl TwoCocycle {
    pub fn new(gram: Matrix, side: Side) -> Result<Self> {
        if !gram.is_square() {
            return Err(HomError::DimensionMismatch(format!("cocycle is {}x{}", gram.rows(), gram.cols())));
        }
        Ok(TwoCocycle { gram, side })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }
}

/// `R = sum_{i,j} entries[i][j] e_i (x) e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub entries: Matrix,
}

impl RMatrix {
    pub fn new(entries: Matrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(HomError::DimensionMismatch(format!("R-matrix is {}x{}", entries.rows(), entries.cols())));
        }
        Ok(RMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.entries.get(i, j)
    }
}

/// Data of a matched pair `(A, H)`: `H` acts on `A` from the left by `|>`
/// (`left[h][a][a']`) and `A` acts on `H` from the right by `<|`
/// (`right[h][a][h']`).
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPairData {
    pub a: HomHopfAlgebra,
    pub h: HomHopfAlgebra,
    pub left: Tensor3,
    pub right: Tensor3,
}

impl MatchedPairData {
    pub fn new(a: HomHopfAlgebra, h: HomHopfAlgebra, left: Tensor3, right: Tensor3) -> Result<Self> {
        let (da, dh) = (a.dim(), h.dim());
        if left.shape() != (dh, da, da) || right.shape() != (dh, da, dh) {
            return Err(HomError::DimensionMismatch(format!(
                "matched pair actions have shapes {:?} and {:?} for dimensions {da}, {dh}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(MatchedPairData { a, h, left, right })
    }
}
