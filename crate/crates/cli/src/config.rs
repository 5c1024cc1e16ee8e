use std::collections::BTreeSet;
use std::path::Path;

use nichols_core::braiding::BraidingMatrix;
use nichols_core::scalars::{parse_scalar, Coefficient};
use nichols_core::smash::{Expr, GroupSpec};
use nichols_core::syntax::parse_expr;
use nichols_core::{Rat, Scalar};
use serde::Deserialize;

use crate::CliError;

/// Session settings read from a TOML file.
///
/// ```toml
/// order = 12
/// params = ["mu1", "mu2"]
///
/// [braiding]
/// q = [["z^4", "1"], ["z^-4", "-1"]]
///
/// [realization]
/// moduli = [12, 12]
/// gens = [[1, 0], [0, 1]]
/// chars = [["z^4", "z^-4"], ["1", "-1"]]
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    #[serde(default = "default_order")]
    pub order: u32,
    pub theta: Option<usize>,
    #[serde(default)]
    pub braiding: Option<BraidingSection>,
    #[serde(default)]
    pub realization: Option<RealizationSection>,
    /// Parameters allowed in expressions besides the `q`-parameters.
    #[serde(default)]
    pub params: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingSection {
    pub q: Vec<Vec<String>>,
}

/// A finite (or partly free) abelian group with `chars[j][k] = chi_j(e_k)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationSection {
    pub moduli: Vec<u32>,
    pub gens: Vec<Vec<i64>>,
    pub chars: Vec<Vec<String>>,
}

fn default_order() -> u32 {
    12
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig { order: default_order(), theta: None, braiding: None, realization: None, params: Vec::new() }
    }
}

impl SessionConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: SessionConfig = toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))?;
        if let (Some(t), Some(b)) = (cfg.theta, &cfg.braiding) {
            if b.q.len() != t {
                return Err(CliError::Usage(format!("config: theta = {t} but braiding has {} rows", b.q.len())));
            }
        }
        cfg.braiding()?;
        if cfg.realization.is_some() {
            cfg.realization_for(&cfg.braiding()?)?;
        }
        Ok(cfg)
    }

    pub fn theta(&self) -> usize {
        self.braiding.as_ref().map(|b| b.q.len()).or(self.theta).unwrap_or(2)
    }

    fn scalar(&self, s: &str) -> Result<Scalar, CliError> {
        parse_scalar::<Rat>(s, self.order).map_err(|e| CliError::Usage(format!("scalar `{s}`: {e}")))
    }

    /// The configured braiding, or the generic one with entries `q11 .. qnn`.
    pub fn braiding(&self) -> Result<BraidingMatrix<Scalar>, CliError> {
        let rows: Vec<Vec<Scalar>> = match &self.braiding {
            Some(b) => b.q.iter().map(|r| r.iter().map(|s| self.scalar(s)).collect()).collect::<Result<_, _>>()?,
            None => {
                let n = self.theta();
                (0..n).map(|i| (0..n).map(|j| Scalar::param(&format!("q{}{}", i + 1, j + 1))).collect()).collect()
            }
        };
        BraidingMatrix::new(rows).map_err(|e| CliError::Usage(format!("braiding: {e}")))
    }

    pub fn realization_for(&self, q: &BraidingMatrix<Scalar>) -> Result<Option<GroupSpec<Scalar>>, CliError> {
        let Some(r) = &self.realization else { return Ok(None) };
        Ok(Some(r.build(q, self.order)?))
    }

    /// Parses an element, rejecting parameters that are neither declared
    /// nor invertible `q`-parameters.
    pub fn parse_element(&self, src: &str) -> Result<Expr<Scalar>, CliError> {
        let e = parse_expr(src, self.order).map_err(|e| CliError::Usage(e.to_string()))?;
        if !self.params.is_empty() {
            let seen = std::cell::RefCell::new(BTreeSet::new());
            let _ = e.try_map_scalars(&|c: &Scalar| -> Result<Scalar, ()> {
                seen.borrow_mut().extend(c.params().into_iter().map(|p| p.name().to_string()));
                Ok(c.clone())
            });
            for p in seen.into_inner() {
                if !p.starts_with('q') && !self.params.contains(&p) {
                    return Err(CliError::Usage(format!("undeclared parameter `{p}`")));
                }
            }
        }
        Ok(e)
    }
}

impl RealizationSection {
    /// Reads either a bare realization file or a session config with a
    /// `[realization]` table.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let err = |e: toml::de::Error| CliError::Usage(format!("realization: {e}"));
        let value: toml::Table = toml::from_str(&text).map_err(err)?;
        match value.get("realization") {
            Some(section) => section.clone().try_into().map_err(err),
            None => value.try_into().map_err(err),
        }
    }

    pub fn build(&self, q: &BraidingMatrix<Scalar>, order: u32) -> Result<GroupSpec<Scalar>, CliError> {
        let chars = self
            .chars
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar::<Rat>(s, order).map_err(|e| CliError::Usage(format!("scalar `{s}`: {e}")))).collect())
            .collect::<Result<Vec<Vec<Scalar>>, _>>()?;
        GroupSpec::realization(q, self.moduli.clone(), self.gens.clone(), chars).map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Matrix text with entries in the canonical scalar syntax.
pub fn matrix_syntax<C: Coefficient>(q: &BraidingMatrix<C>, n: u32) -> String {
    let rows: Vec<String> =
        q.entries().iter().map(|r| format!("[{}]", r.iter().map(|c| c.to_syntax(n)).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_config() {
        let cfg = SessionConfig::parse(
            r#"
order = 12
params = ["mu1"]
[braiding]
q = [["z^4", "1"], ["z^-4", "-1"]]
[realization]
moduli = [12, 12]
gens = [[1, 0], [0, 1]]
chars = [["z^4", "z^-4"], ["1", "-1"]]
"#,
        )
        .unwrap();
        assert_eq!(cfg.theta(), 2);
        assert!(cfg.realization_for(&cfg.braiding().unwrap()).unwrap().is_some());
        assert!(cfg.parse_element("x1^3 - mu1 (1 - g1^3)").is_ok());
        assert!(matches!(cfg.parse_element("lambda12 x1"), Err(CliError::Usage(_))));
    }

    #[test]
    fn bad_realization() {
        let r = SessionConfig::parse(
            r#"
[braiding]
q = [["z^4", "1"], ["z^-4", "-1"]]
[realization]
moduli = [12, 12]
gens = [[1, 0], [0, 1]]
chars = [["z^4", "1"], ["1", "-1"]]
"#,
        );
        assert!(matches!(r, Err(CliError::Usage(_))));
    }

    #[test]
    fn generic_braiding() {
        let q = SessionConfig::default().braiding().unwrap();
        assert_eq!(q.q(0, 1).to_string(), "q12");
    }
}
