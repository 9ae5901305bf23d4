//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule, evaluated on beta-sets
//! (first-column hook lengths) so that removing a border strip of length `k`
//! is a single shift `b -> b - k`. Complete tables are built once per `n`
//! per engine and can be persisted as versioned JSON files.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{check_same_weight, partitions_of, Partition};

/// Largest `n` for which full tables are built unless configured otherwise.
pub const DEFAULT_TABLE_CAP: usize = 14;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "HURWITZ_CACHE_DIR";

const CACHE_VERSION: u32 = 1;

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Murnaghan–Nakayama recursion; `mu` must be sorted descending.
fn murnaghan_nakayama(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + len - 1 - i)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut shifted = beta.clone();
        shifted[idx] = target;
        shifted.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = shifted
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&part| part > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character value computed directly, without building a table.
pub fn character_uncached(lambda: &Partition, mu: &Partition) -> Result<i64> {
    check_same_weight(lambda, mu)?;
    Ok(murnaghan_nakayama(
        lambda.parts(),
        mu.parts(),
        &mut Memo::new(),
    ))
}

/// The full character table of `S_n`, rows and columns in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    n: usize,
    partitions: Vec<Partition>,
    table: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// Computes the table from scratch.
    pub fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut memo = Memo::new();
        let entries = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| murnaghan_nakayama(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self::assemble(n, partitions, entries)
    }

    fn assemble(n: usize, partitions: Vec<Partition>, entries: Vec<Vec<i64>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels in canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        check_same_weight(lambda, mu)?;
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => Ok(self.entries[i][j]),
            _ => Err(Error::WeightMismatch {
                left: format!("{lambda:?}"),
                left_weight: lambda.weight(),
                right: format!("table for n = {}", self.n),
                right_weight: self.n,
            }),
        }
    }

    /// Cache-file JSON (`{"version":1,"n":..,"partitions":[..],"table":[..]}`).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CacheFile {
            version: CACHE_VERSION,
            n: self.n,
            partitions: self.partitions.clone(),
            table: self.entries.clone(),
        })
        .expect("character table serializes")
    }

    /// Parses and validates cache-file JSON. Returns `None` if the payload is
    /// malformed, for a different `n`, or fails the cheap consistency checks.
    pub fn from_json(n: usize, text: &str) -> Option<Self> {
        let file: CacheFile = serde_json::from_str(text).ok()?;
        if file.version != CACHE_VERSION || file.n != n || file.partitions != partitions_of(n) {
            return None;
        }
        let size = file.partitions.len();
        if file.table.len() != size || file.table.iter().any(|row| row.len() != size) {
            return None;
        }
        // row (n) is trivial and column (1^n) holds the dimensions
        if file.table[0].iter().any(|&v| v != 1) {
            return None;
        }
        let identity = size - 1;
        for (row, lam) in file.table.iter().zip(&file.partitions) {
            if num_bigint::BigInt::from(row[identity]) != lam.dimension() {
                return None;
            }
        }
        Some(Self::assemble(n, file.partitions, file.table))
    }
}

/// Default on-disk location: `$HURWITZ_CACHE_DIR`, else
/// `<user data dir>/hurwitz/characters`.
pub fn default_cache_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::data_dir().map(|d| d.join("hurwitz").join("characters")),
    }
}

pub fn cache_file_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("characters-n{n}.json"))
}

static GLOBAL: OnceLock<CharacterEngine> = OnceLock::new();

/// Builds and hands out character tables, optionally backed by a disk cache.
#[derive(Debug)]
pub struct CharacterEngine {
    cap: usize,
    cache_dir: Option<PathBuf>,
    tables: Mutex<HashMap<usize, Arc<OnceLock<Arc<CharacterTable>>>>>,
}

impl CharacterEngine {
    pub fn new(cap: usize, cache_dir: Option<PathBuf>) -> Self {
        CharacterEngine {
            cap,
            cache_dir,
            tables: Mutex::new(HashMap::new()),
        }
    }

    /// Memory-only engine with the default cap.
    pub fn in_memory() -> Self {
        Self::new(DEFAULT_TABLE_CAP, None)
    }

    /// Process-wide engine used by the free functions; memory-only unless
    /// [`CharacterEngine::install_global`] ran first.
    pub fn global() -> &'static CharacterEngine {
        GLOBAL.get_or_init(CharacterEngine::in_memory)
    }

    /// Makes `engine` the process-wide engine. Fails, returning it, if the
    /// global engine is already in use.
    pub fn install_global(engine: CharacterEngine) -> std::result::Result<(), CharacterEngine> {
        GLOBAL.set(engine)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    /// Table for `S_n`, built at most once per engine.
    pub fn table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if n == 0 || n > self.cap {
            if n == 0 {
                return Err(Error::InvalidArgument(
                    "character tables need n >= 1".into(),
                ));
            }
            return Err(Error::CapExceeded {
                what: "character table",
                requested: n,
                cap: self.cap,
            });
        }
        let cell = {
            let mut tables = self.tables.lock().expect("table registry poisoned");
            tables.entry(n).or_default().clone()
        };
        Ok(cell.get_or_init(|| Arc::new(self.load_or_build(n))).clone())
    }

    fn load_or_build(&self, n: usize) -> CharacterTable {
        let Some(dir) = &self.cache_dir else {
            return CharacterTable::compute(n);
        };
        let path = cache_file_path(dir, n);
        match fs::read_to_string(&path) {
            Ok(text) => {
                if let Some(table) = CharacterTable::from_json(n, &text) {
                    return table;
                }
                log::warn!("character cache {} is corrupt; recomputing", path.display());
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => log::warn!("cannot read character cache {}: {e}", path.display()),
        }
        let table = CharacterTable::compute(n);
        if let Err(e) = write_atomic(&path, &table.to_json()) {
            log::warn!("{e}");
        }
        table
    }

    /// `chi_lambda(mu)`; uses the table when `n` is within the cap and the
    /// direct recursion otherwise.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        check_same_weight(lambda, mu)?;
        let n = lambda.weight();
        if n == 0 {
            return Ok(1);
        }
        if n <= self.cap {
            self.table(n)?.get(lambda, mu)
        } else {
            character_uncached(lambda, mu)
        }
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io_err = |source| Error::CacheIo {
        path: path.to_path_buf(),
        source,
    };
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(io_err)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// `chi_lambda(mu)` from the global engine.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharacterEngine::global().character(lambda, mu)
}

/// Character table of `S_n` from the global engine.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    CharacterEngine::global().table(n)
}
