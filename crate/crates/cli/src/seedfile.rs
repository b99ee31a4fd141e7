//! Seed files and the `--seed` argument.
//!
//! A seed file is a JSON array of rational strings, `["1", "1/2", "5/24"]`,
//! where entry `n` is the coefficient of `t^n`; entry 0 must be `"1"`.

use std::path::Path;

use sprout_core::seeds::{seed_by_name, SeedSpec};
use sprout_core::sprout::Seed;
use sprout_core::{Error, Result, Series};

use crate::json::{parse_rational, rational_to_string};

pub fn parse_seed_json(text: &str, name: &str) -> Result<Seed> {
    let entries: Vec<String> =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("seed file {name}: {e}")))?;
    if entries.is_empty() {
        return Err(Error::Invalid(format!("seed file {name} is empty")));
    }
    let coeffs = entries.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    if coeffs[0] != num_traits::One::one() {
        return Err(Error::ConstantTerm { expected: "1" });
    }
    Seed::named(name, Series::new(coeffs)?)
}

pub fn load_seed_file(path: &Path) -> Result<Seed> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_seed_json(&text, &format!("file:{}", path.display()))
}

pub fn seed_to_json(seed: &Seed) -> String {
    let entries: Vec<String> = seed.series().coeffs().iter().map(rational_to_string).collect();
    serde_json::to_string(&entries).expect("serializable")
}

/// Resolves `--seed`: a catalog name, or `file:PATH`. Catalog seeds are built
/// with exactly `precision` coefficients after the constant term; file seeds
/// keep what the file provides.
pub fn resolve_seed(arg: &str, precision: usize) -> Result<Seed> {
    match arg.strip_prefix("file:") {
        Some(path) => load_seed_file(Path::new(path)),
        None => seed_by_name(&SeedSpec::parse(arg)?, precision),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sprout_core::rational;
    use std::io::Write;

    #[test]
    fn parse_and_write() {
        let seed = parse_seed_json(r#"["1", "1/2", "5/24", "61/720"]"#, "sec").unwrap();
        assert_eq!(seed.precision(), 3);
        assert_eq!(seed.a(2).unwrap(), &rational(5, 24));
        assert_eq!(seed_to_json(&seed), r#"["1/1","1/2","5/24","61/720"]"#);
        assert_eq!(parse_seed_json(r#"["2", "1"]"#, "x"), Err(Error::ConstantTerm { expected: "1" }));
        assert!(parse_seed_json("[]", "x").is_err());
        assert!(parse_seed_json(r#"["1", "a"]"#, "x").is_err());
        assert!(parse_seed_json("{", "x").is_err());
    }

    #[test]
    fn file_and_catalog_agree() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        let sec = resolve_seed("secsqrt", 5).unwrap();
        file.write_all(seed_to_json(&sec).as_bytes()).unwrap();
        let arg = format!("file:{}", file.path().display());
        let loaded = resolve_seed(&arg, 99).unwrap();
        assert_eq!(loaded.series(), sec.series());
        assert!(resolve_seed("file:/nonexistent/seed.json", 3).is_err());
        assert!(matches!(resolve_seed("nope", 3), Err(Error::UnknownSeed(_))));
    }
}
