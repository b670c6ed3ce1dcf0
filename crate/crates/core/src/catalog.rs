//! Built-in exact instances: the two-dimensional algebra `A^1_x` with its
//! group-algebra action, the Hom-Sweedler algebra, twisted group algebras,
//! and golden tables for the bicrossproduct of `A^1_x` with `k[Z/2]`.

use crate::constructions::yau_twist;
use crate::error::{HomError, Result};
use crate::exactlin::{frac, int, parse_scalar, Matrix, Scalar, Tensor3};
use crate::structures::{ComoduleCoaction, HomHopfAlgebra, ModuleAction, RMatrix};

/// A finite group by its multiplication table, with the automorphism used
/// to twist its group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub table: Vec<Vec<usize>>,
    pub automorphism: Vec<usize>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupData {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

/// `A` with a left `H`-action and a right `A`-coaction on `H`, the input of a
/// bicrossproduct on `A (x) H`.
#[derive(Clone, Debug)]
pub struct BicrossInput {
    pub actor: HomHopfAlgebra,
    pub actor_basis: Vec<String>,
    pub action: ModuleAction,
    pub coaction: ComoduleCoaction,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub basis: Vec<String>,
    pub hopf: HomHopfAlgebra,
    pub bicross: Option<BicrossInput>,
    pub r_matrix: Option<RMatrix>,
    pub group: Option<GroupData>,
}

impl CatalogEntry {
    fn plain(name: impl Into<String>, basis: Vec<String>, hopf: HomHopfAlgebra) -> Self {
        CatalogEntry { name: name.into(), basis, hopf, bicross: None, r_matrix: None, group: None }
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn tensor_from(n: usize, entries: &[((usize, usize, usize), i64)]) -> Tensor3 {
    let mut t = Tensor3::zeros(n, n, n);
    for &((i, j, k), v) in entries {
        t.set(i, j, k, int(v));
    }
    t
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

/// `A^1_x = span{1, x}` with `beta(x) = -x`, `1 x = x 1 = -x`, `x^2 = 0`,
/// `Delta(x) = -x (x) 1 - 1 (x) x`, `S(x) = -x`, bundled with the action of
/// `k[Z/2]` by `g . x = x` and the trivial coaction `rho(h) = h (x) 1`.
pub fn catalog_ax1() -> CatalogEntry {
    let mul = tensor_from(2, &[((0, 0, 0), 1), ((0, 1, 1), -1), ((1, 0, 1), -1)]);
    let comul = tensor_from(2, &[((0, 0, 0), 1), ((1, 1, 0), -1), ((1, 0, 1), -1)]);
    let beta = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let hopf = HomHopfAlgebra::from_parts(mul, ints(&[1, 0]), comul, ints(&[1, 0]), beta.clone(), beta.clone())
        .expect("A^1_x data is well-formed");
    let z2 = catalog_group("kz2", &[vec![0, 1], vec![1, 0]], &[0, 1]).expect("Z/2 is a group");
    let act = tensor_from(2, &[((0, 0, 0), 1), ((0, 1, 1), -1), ((1, 0, 0), 1), ((1, 1, 1), 1)]);
    let coact = tensor_from(2, &[((0, 0, 0), 1), ((1, 1, 0), 1)]);
    let bicross = BicrossInput {
        actor_basis: z2.basis.clone(),
        action: ModuleAction::left(act, beta).expect("action shape"),
        coaction: ComoduleCoaction::right(coact, z2.hopf.alpha().clone()).expect("coaction shape"),
        actor: z2.hopf,
    };
    CatalogEntry { bicross: Some(bicross), ..CatalogEntry::plain("ax1", labels(&["1", "x"]), hopf) }
}

/// Classical Sweedler algebra in the basis `{1, g, x, w}` with `w = -gx`.
fn classical_sweedler() -> HomHopfAlgebra {
    let mul = tensor_from(
        4,
        &[
            ((0, 0, 0), 1),
            ((0, 1, 1), 1),
            ((0, 2, 2), 1),
            ((0, 3, 3), 1),
            ((1, 0, 1), 1),
            ((2, 0, 2), 1),
            ((3, 0, 3), 1),
            ((1, 1, 0), 1),
            ((1, 2, 3), -1),
            ((1, 3, 2), -1),
            ((2, 1, 3), 1),
            ((3, 1, 2), 1),
        ],
    );
    let comul = tensor_from(
        4,
        &[((0, 0, 0), 1), ((1, 1, 1), 1), ((2, 2, 1), 1), ((2, 0, 2), 1), ((3, 3, 0), 1), ((3, 1, 3), 1)],
    );
    let s = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    HomHopfAlgebra::from_parts(mul, ints(&[1, 0, 0, 0]), comul, ints(&[1, 1, 0, 0]), Matrix::identity(4), s)
        .expect("Sweedler data is well-formed")
}

/// Yau twist of the Sweedler algebra by `alpha(x) = lambda x`, in the basis
/// `{1, g, x, gx}` where `gx` is the twisted product of `g` and `x` at
/// `lambda = -1`. `lambda = -1` gives `alpha(x) = -x`, `gx = -xg`,
/// `Delta(x) = -x (x) g - 1 (x) x` and `S(x) = -gx`, quasitriangular with
/// `R = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2`.
pub fn catalog_sweedler_hom(lambda: &Scalar) -> Result<CatalogEntry> {
    if lambda == &int(0) {
        return Err(HomError::InvalidParameter("the scaling of x must be nonzero".into()));
    }
    let endo = Matrix::diagonal(&[int(1), int(1), lambda.clone(), lambda.clone()]);
    let hopf = yau_twist(&classical_sweedler(), &endo)?;
    let half = frac(1, 2);
    let mut r = Matrix::zeros(4, 4);
    r.set(0, 0, half.clone());
    r.set(0, 1, half.clone());
    r.set(1, 0, half.clone());
    r.set(1, 1, -half);
    let name = if lambda == &int(-1) { "sweedler_hom".to_string() } else { format!("sweedler_hom:{lambda}") };
    Ok(CatalogEntry {
        r_matrix: Some(RMatrix::new(r)?),
        ..CatalogEntry::plain(name, labels(&["1", "g", "x", "gx"]), hopf)
    })
}

fn power_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect()
}

/// Group algebra `kG` twisted by an automorphism `phi`: `g . h = phi(gh)`,
/// `Delta(g) = phi(g) (x) phi(g)`, `S(g) = g^-1`.
pub fn catalog_group(name: &str, table: &[Vec<usize>], automorphism: &[usize]) -> Result<CatalogEntry> {
    let group = validate_group(table, automorphism)?;
    let n = table.len();
    let mut mul = Tensor3::zeros(n, n, n);
    let mut comul = Tensor3::zeros(n, n, n);
    for a in 0..n {
        comul.set(a, a, a, int(1));
        for b in 0..n {
            mul.set(a, b, table[a][b], int(1));
        }
    }
    let mut unit = vec![int(0); n];
    unit[group.identity] = int(1);
    let classical = HomHopfAlgebra::from_parts(
        mul,
        unit,
        comul,
        vec![int(1); n],
        Matrix::identity(n),
        Matrix::permutation(&group.inverse),
    )?;
    let hopf = yau_twist(&classical, &Matrix::permutation(automorphism))?;
    let basis = if group.identity == 0 { power_labels(n) } else { (0..n).map(|i| format!("e{i}")).collect() };
    Ok(CatalogEntry { group: Some(group), ..CatalogEntry::plain(name, basis, hopf) })
}

fn validate_group(table: &[Vec<usize>], automorphism: &[usize]) -> Result<GroupData> {
    let n = table.len();
    if n == 0 {
        return Err(HomError::NotAGroup("empty table".into()));
    }
    if let Some(r) = table.iter().position(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(HomError::NotAGroup(format!("row {r} is not a list of {n} elements")));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(HomError::NotAGroup(format!("({a} {b}) {c} differs from {a} ({b} {c})")));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| HomError::NotAGroup("no identity element".into()))?;
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| table[a][b] == identity && table[b][a] == identity)
            .ok_or_else(|| HomError::NotAGroup(format!("element {a} has no inverse")))?;
        inverse.push(inv);
    }
    if automorphism.len() != n {
        return Err(HomError::NotAnAutomorphism(format!(
            "has {} entries for a group of order {n}",
            automorphism.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in automorphism {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(HomError::NotAnAutomorphism("not a bijection".into()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if automorphism[table[a][b]] != table[automorphism[a]][automorphism[b]] {
                return Err(HomError::NotAnAutomorphism(format!("does not respect the product of {a} and {b}")));
            }
        }
    }
    Ok(GroupData { table: table.to_vec(), automorphism: automorphism.to_vec(), identity, inverse })
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// `k[Z/n]` twisted by inversion: `g^i . g^j = g^-(i+j)`,
/// `Delta(g^i) = g^-i (x) g^-i`, `S(g^i) = g^-i`.
pub fn catalog_cyclic(n: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(HomError::InvalidParameter(format!("cyclic order must be at least 2, got {n}")));
    }
    let inversion: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    catalog_group(&format!("cyclic:{n}"), &cyclic_table(n), &inversion)
}

/// `k[Z/n]` twisted by `g -> g^k`.
pub fn catalog_zn_aut(n: usize, k: usize) -> Result<CatalogEntry> {
    if n < 1 {
        return Err(HomError::InvalidParameter("group order must be positive".into()));
    }
    let phi: Vec<usize> = (0..n).map(|i| (i * k) % n).collect();
    catalog_group(&format!("zn_aut:{n}:{k}"), &cyclic_table(n), &phi)
}

/// `k[S_3]` twisted by conjugation with a 3-cycle. Elements are the
/// permutations of `{0, 1, 2}` in lexicographic order.
pub fn catalog_s3() -> Result<CatalogEntry> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("a permutation of three points");
    // (p q)(i) = p(q(i))
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table: Vec<Vec<usize>> = perms.iter().map(|&p| perms.iter().map(|&q| index(compose(p, q))).collect()).collect();
    let c = perms[3];
    let c_inv = perms[4];
    let phi: Vec<usize> = perms.iter().map(|&p| index(compose(compose(c, p), c_inv))).collect();
    let mut entry = catalog_group("s3", &table, &phi)?;
    entry.basis = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
    Ok(entry)
}

/// The ground field as a one-dimensional Hom-Hopf algebra.
pub fn catalog_trivial() -> CatalogEntry {
    let one = Tensor3::from_fn(1, 1, 1, |_, _, _| int(1));
    let hopf =
        HomHopfAlgebra::from_parts(one.clone(), ints(&[1]), one, ints(&[1]), Matrix::identity(1), Matrix::identity(1))
            .expect("one-dimensional data");
    CatalogEntry::plain("trivial", labels(&["1"]), hopf)
}

/// Expected structure of the bicrossproduct `A^1_x # k[Z/2]` in the basis
/// `1#1, 1#g, x#1, x#g`.
#[derive(Clone, Debug)]
pub struct BicrossGolden {
    pub basis: Vec<String>,
    pub mul: Tensor3,
    pub comul: Tensor3,
    pub antipode: Matrix,
}

pub fn catalog_ax1_bicross_golden() -> BicrossGolden {
    // Row-by-row product table: (left, right, result, coefficient).
    let products: [(usize, usize, usize, i64); 12] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, -1),
        (0, 3, 3, -1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, -1),
        (2, 1, 3, -1),
        (3, 0, 3, -1),
        (3, 1, 2, -1),
    ];
    let mul = tensor_from(4, &products.map(|(i, j, k, v)| ((i, j, k), v)));
    let comul = tensor_from(
        4,
        &[((0, 0, 0), 1), ((1, 1, 1), 1), ((2, 2, 0), -1), ((2, 0, 2), -1), ((3, 1, 3), 1), ((3, 3, 1), -1)],
    );
    let antipode = Matrix::diagonal(&ints(&[1, 1, -1, 1]));
    BicrossGolden { basis: labels(&["1#1", "1#g", "x#1", "x#g"]), mul, comul, antipode }
}

/// Names accepted by [`lookup`], with their parameter syntax.
pub const CATALOG_NAMES: &[&str] =
    &["ax1", "kz2", "sweedler_hom", "sweedler_hom:<lambda>", "cyclic:<n>", "zn_aut:<n>:<k>", "s3", "trivial"];

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| HomError::InvalidParameter(format!("{what} must be a nonnegative integer, got {s:?}")))
}

/// Resolves `name` or `name:param` to a catalog entry.
pub fn lookup(spec: &str) -> Result<CatalogEntry> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["ax1"] => Ok(catalog_ax1()),
        ["kz2"] => catalog_group("kz2", &cyclic_table(2), &[0, 1]),
        ["sweedler_hom"] => catalog_sweedler_hom(&int(-1)),
        ["sweedler_hom", l] => {
            let lambda = parse_scalar(l).map_err(|e| HomError::InvalidParameter(format!("{l:?}: {e}")))?;
            catalog_sweedler_hom(&lambda)
        }
        ["cyclic", n] => catalog_cyclic(parse_usize(n, "cyclic order")?),
        ["zn_aut", n, k] => catalog_zn_aut(parse_usize(n, "group order")?, parse_usize(k, "exponent")?),
        ["s3"] => catalog_s3(),
        ["trivial"] => Ok(catalog_trivial()),
        _ => Err(HomError::InvalidParameter(format!(
            "unknown catalog entry {spec:?}; known: {}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}
