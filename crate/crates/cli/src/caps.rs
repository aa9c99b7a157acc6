//! Default size caps for the verification suites, overridable from an
//! explicit key=value config file (no implicit environment lookups).

use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest core size scanned by the k = l sweep.
    pub core_size: u64,
    /// Largest d scanned by the k = l sweep.
    pub core_d: u32,
    /// Largest n for the type-A cuspidality sweep.
    pub cuspidal_n: u32,
    /// Largest n for the series partition sweep.
    pub series_n: u32,
    /// Largest d for the series partition sweep.
    pub series_d: u32,
    /// Largest n for the regular-element identity.
    pub michel_n: u32,
    /// Largest n for the filtration transfer.
    pub filtration_n: u32,
    /// Largest symmetric rank for table checks.
    pub chartab_n: u32,
    /// Largest classical rank.
    pub classical_n: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            core_size: 25,
            core_d: 7,
            cuspidal_n: 12,
            series_n: 12,
            series_d: 6,
            michel_n: 10,
            filtration_n: 6,
            chartab_n: 10,
            classical_n: 12,
        }
    }
}

impl Caps {
    /// Reads `key = value` lines; `#` starts a comment. Unknown keys are
    /// rejected so typos do not silently keep defaults.
    pub fn from_config(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut caps = Caps::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {}: expected key=value", lineno + 1));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_u64 = || {
                value
                    .parse::<u64>()
                    .map_err(|e| format!("line {}: {e}", lineno + 1))
            };
            let parse_u32 = || {
                value
                    .parse::<u32>()
                    .map_err(|e| format!("line {}: {e}", lineno + 1))
            };
            match key {
                "core_size" => caps.core_size = parse_u64()?,
                "core_d" => caps.core_d = parse_u32()?,
                "cuspidal_n" => caps.cuspidal_n = parse_u32()?,
                "series_n" => caps.series_n = parse_u32()?,
                "series_d" => caps.series_d = parse_u32()?,
                "michel_n" => caps.michel_n = parse_u32()?,
                "filtration_n" => caps.filtration_n = parse_u32()?,
                "chartab_n" => caps.chartab_n = parse_u32()?,
                "classical_n" => caps.classical_n = parse_u32()?,
                other => return Err(format!("line {}: unknown key {other:?}", lineno + 1)),
            }
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides_and_rejects_unknown_keys() {
        let dir = std::env::temp_dir();
        let path = dir.join("caps-test.conf");
        std::fs::write(&path, "# comment\ncore_size = 10\nmichel_n=6\n").unwrap();
        let caps = Caps::from_config(&path).unwrap();
        assert_eq!(caps.core_size, 10);
        assert_eq!(caps.michel_n, 6);
        assert_eq!(caps.core_d, Caps::default().core_d);
        std::fs::write(&path, "not_a_key = 3\n").unwrap();
        assert!(Caps::from_config(&path).is_err());
        std::fs::remove_file(&path).ok();
    }
}
