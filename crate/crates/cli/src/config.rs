use std::path::PathBuf;

use pq_core::lie::VERIFIERS;
use pq_core::poset::PosetKind;
use pq_core::Limits;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Group,
    Poset,
    Complex,
    Homology,
    Verify,
    Suite,
    List,
}

/// Everything that determines a run. Paths and the timing switch are not
/// part of the reported config, so identical configs give identical output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verifier: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(rename = "Gdf", skip_serializing_if = "Option::is_none")]
    pub gdf: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<PosetKind>,
    pub limits: Limits,
    pub slow: bool,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub no_timing: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            verifier: None,
            group: None,
            h: None,
            gdf: None,
            p: None,
            r: None,
            kind: None,
            limits: Limits::default(),
            slow: false,
            cache_dir: None,
            out: None,
            no_timing: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let l = &self.limits;
        if l.elements == 0 || l.poset == 0 || l.simplices == 0 {
            return Err(CliError::Input("caps must be positive".into()));
        }
        if let Some(v) = &self.verifier {
            if !VERIFIERS.contains(&v.as_str()) {
                return Err(CliError::Input(format!("unknown verifier {v}")));
            }
        }
        let needs_group = matches!(
            self.command,
            Command::Group | Command::Poset | Command::Complex | Command::Homology | Command::Verify
        );
        if needs_group && self.group.is_none() {
            return Err(CliError::Input("--group is required".into()));
        }
        let needs_p = matches!(self.command, Command::Poset | Command::Complex | Command::Homology | Command::Verify);
        if needs_p && self.p.is_none() {
            return Err(CliError::Input("--p is required".into()));
        }
        Ok(())
    }

    pub fn group(&self) -> &str {
        self.group.as_deref().unwrap_or_default()
    }

    pub fn kind(&self) -> PosetKind {
        self.kind.unwrap_or(PosetKind::Quillen)
    }
}
