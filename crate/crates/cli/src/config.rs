use std::path::Path;

use cremona::birmap::Caps;
use cremona::io::{parse_maps_file, NamedMap};
use serde::Deserialize;

use crate::GlobalArgs;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Human,
    Json,
}

/// Optional TOML defaults; flags and `CREMONA_MAX_TERMS` take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    format: Option<Format>,
    n_max: Option<usize>,
    max_degree: Option<u32>,
    max_terms: Option<usize>,
    relation_bound: Option<u32>,
    jobs: Option<usize>,
    maps: Option<std::path::PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub format: Format,
    pub n_max: Option<usize>,
    pub caps: Caps,
    pub relation_bound: u32,
    pub jobs: Option<usize>,
    pub maps: Vec<NamedMap>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            format: Format::Human,
            n_max: None,
            caps: Caps::default(),
            relation_bound: cremona::heisenberg::DEFAULT_RELATION_BOUND,
            jobs: None,
            maps: Vec::new(),
        }
    }
}

fn positive<T: PartialOrd + Default + std::fmt::Display>(name: &str, v: Option<T>) -> Result<Option<T>, String> {
    match v {
        Some(v) if v <= T::default() => Err(format!("--{name} must be positive, got {v}")),
        v => Ok(v),
    }
}

fn load_maps(path: &Path) -> Result<Vec<NamedMap>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_maps_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

impl Settings {
    pub fn resolve(args: &GlobalArgs) -> Result<Self, String> {
        let file = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| format!("{}: {e}", path.display()))?
            }
            None => FileConfig::default(),
        };
        let base = Settings {
            format: file.format.unwrap_or_default(),
            n_max: positive("n-max", file.n_max)?,
            caps: Caps {
                max_degree: positive("max-degree", file.max_degree)?.unwrap_or(Caps::default().max_degree),
                max_terms: positive("max-terms", file.max_terms)?.unwrap_or(Caps::default().max_terms),
            },
            relation_bound: positive("relation-bound", file.relation_bound)?
                .unwrap_or(cremona::heisenberg::DEFAULT_RELATION_BOUND),
            jobs: positive("jobs", file.jobs)?,
            // relative to the config file, not the working directory
            maps: match (&file.maps, &args.config) {
                (Some(p), Some(cfg)) => load_maps(&cfg.parent().unwrap_or(Path::new("")).join(p))?,
                _ => Vec::new(),
            },
        };
        base.overlay(args)
    }

    /// Apply the flags given explicitly in `args` on top of `self`.
    pub fn overlay(&self, args: &GlobalArgs) -> Result<Self, String> {
        let mut s = self.clone();
        if let Some(f) = args.format {
            s.format = f;
        }
        if let Some(n) = positive("n-max", args.n_max)? {
            s.n_max = Some(n);
        }
        if let Some(d) = positive("max-degree", args.max_degree)? {
            s.caps.max_degree = d;
        }
        if let Some(t) = positive("max-terms", args.max_terms)? {
            s.caps.max_terms = t;
        }
        if let Some(b) = positive("relation-bound", args.relation_bound)? {
            s.relation_bound = b;
        }
        if let Some(j) = positive("jobs", args.jobs)? {
            s.jobs = Some(j);
        }
        if let Some(p) = &args.maps {
            s.maps = load_maps(p)?;
        }
        Ok(s)
    }
}
