//! Symmetric group characters: class sizes, the Murnaghan-Nakayama
//! recursion, and isotypic decomposition of class functions.

use crate::error::{Error, Result};
use crate::partition::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// A class function on `S_N`: one exact rational per cycle type.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub n: u32,
    pub values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn new(n: u32) -> Self {
        let values = Partition::all(n).into_iter().map(|p| (p, BigRational::zero())).collect();
        ClassFunction { n, values }
    }

    pub fn set(&mut self, class: &Partition, value: BigRational) {
        self.values.insert(class.clone(), value);
    }

    pub fn get(&self, class: &Partition) -> BigRational {
        self.values.get(class).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// `n!`.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Conjugacy class size `N!/z_rho`, `z_rho = prod_k k^{m_k} m_k!`.
pub fn class_size(rho: &Partition) -> BigInt {
    let n = rho.size();
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (&k, &m) in mult.iter() {
        z *= BigInt::from(k).pow(m);
        z *= factorial(m);
    }
    factorial(n) / z
}

/// Character table of `S_N`, built once per `N` via Murnaghan-Nakayama and
/// shared behind an `Arc`.
pub struct CharacterTable {
    pub n: u32,
    /// Row and column labels, in the order of `Partition::all(n)`.
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `table[lambda][rho]`.
    pub table: Vec<Vec<i64>>,
    pub class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.table[self.index[lambda]][self.index[rho]]
    }

    pub fn dim(&self, lambda: &Partition) -> i64 {
        let identity = Partition::column(self.n);
        self.value(lambda, &identity)
    }
}

/// Murnaghan-Nakayama on first-column hook lengths (beta numbers): removing a
/// border strip of length `r` moves one beta number down by `r`; the sign is
/// given by the number of beta numbers jumped over.
fn mn_char(beta: &[i64], rho: &[u32], memo: &mut HashMap<(Vec<i64>, Vec<u32>), i64>) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0] as i64;
    let rest = &rho[1..];
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let t = b - r;
        if t < 0 || beta.contains(&t) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| t < x && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<i64> = beta.to_vec();
        next[i] = t;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_char(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

fn beta_numbers(lambda: &Partition, len: usize) -> Vec<i64> {
    (0..len).map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64).collect()
}

/// Irreducible character value `chi^lambda(rho)`.
pub fn irr_char(lambda: &Partition, rho: &Partition) -> i64 {
    debug_assert_eq!(lambda.size(), rho.size());
    character_table(lambda.size()).value(lambda, rho)
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();

/// The memoized character table for `S_N`.  Safe for concurrent use; a lost
/// insertion race just recomputes the same table.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let partitions = Partition::all(n);
    let index: HashMap<Partition, usize> =
        partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let len = n as usize;
    let mut memo = HashMap::new();
    let table: Vec<Vec<i64>> = partitions
        .iter()
        .map(|lambda| {
            let beta = beta_numbers(lambda, len.max(1));
            partitions.iter().map(|rho| mn_char(&beta, rho.parts(), &mut memo)).collect()
        })
        .collect();
    let class_sizes = partitions.iter().map(class_size).collect();
    let t = Arc::new(CharacterTable { n, partitions, index, table, class_sizes });
    let mut guard = tables.lock().unwrap();
    Arc::clone(guard.entry(n).or_insert(t))
}

/// Isotypic multiplicities `m_lambda = (1/N!) sum_rho |C_rho| f(rho) chi^lambda(rho)`.
pub fn decompose_class_function(f: &ClassFunction) -> BTreeMap<Partition, BigRational> {
    let table = character_table(f.n);
    let nfact = BigRational::from_integer(factorial(f.n));
    let mut out = BTreeMap::new();
    for lambda in &table.partitions {
        let mut acc = BigRational::zero();
        for (i, rho) in table.partitions.iter().enumerate() {
            let chi = BigRational::from_integer(BigInt::from(table.value(lambda, rho)));
            acc += BigRational::from_integer(table.class_sizes[i].clone()) * f.get(rho) * chi;
        }
        let m = acc / &nfact;
        if !m.is_zero() {
            out.insert(lambda.clone(), m);
        }
    }
    out
}

/// Decomposition of a claimed true character: every multiplicity must be a
/// nonnegative integer, otherwise the input was not a character.
pub fn decompose_character(f: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for (lambda, m) in decompose_class_function(f) {
        if !m.is_integer() || m.is_negative() {
            return Err(Error::BadMultiplicity {
                label: format!("W_({lambda})"),
                value: m.to_string(),
            });
        }
        out.insert(lambda, m.to_integer());
    }
    Ok(out)
}
