//! Scene files: JSON documents naming an algebra, entities, an expression
//! and an optional rigid-body setup.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use pga_core::dynamics::{BodyState, InertiaOperator};
use pga_core::{Multivector, Pga, ScrewGenerator};
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
pub enum ModelName {
    Pga,
    Cga,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    pub n: usize,
    pub model: ModelName,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineConfig {
    pub points: Option<[Vec<f64>; 2]>,
    pub planes: Option<[Vec<f64>; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Entity {
    Point(Vec<f64>),
    Plane(Vec<f64>),
    Line(LineConfig),
    Multivector(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoseConfig {
    pub axis_point: Vec<f64>,
    pub axis_direction: Vec<f64>,
    pub angle: f64,
    pub displacement: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynamicsConfig {
    pub moments: [f64; 3],
    pub mass: f64,
    pub pose: Option<PoseConfig>,
    pub momentum: [f64; 6],
    pub h: f64,
    pub steps: usize,
    #[serde(default = "default_true")]
    pub renormalize: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    pub algebra: AlgebraConfig,
    #[serde(default)]
    pub entities: BTreeMap<String, Entity>,
    pub expression: Option<String>,
    pub dynamics: Option<DynamicsConfig>,
}

impl SceneConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading scene {}", path.display()))?;
        let scene: Self = serde_json::from_str(&text).with_context(|| format!("parsing scene {}", path.display()))?;
        if let Some(d) = &scene.dynamics {
            if !(d.h.is_finite() && d.h > 0.0) {
                bail!("dynamics.h must be positive");
            }
            if d.steps < 1 {
                bail!("dynamics.steps must be at least 1");
            }
        }
        Ok(scene)
    }

    /// The euclidean PGA of the scene. CGA scenes are refused: the operator
    /// bindings of expressions and entities are those of the plane-based
    /// algebra.
    pub fn pga(&self) -> Result<Pga> {
        if self.algebra.model != ModelName::Pga {
            bail!("scene model is CGA: expressions and entities are bound to the plane-based PGA, so this command requires model \"PGA\"");
        }
        Ok(Pga::new(self.algebra.n)?)
    }

    /// Entities as normalized blades (points to weight 1, planes and lines
    /// to unit euclidean norm).
    pub fn bindings(&self, pga: &Pga) -> Result<Vec<(String, Multivector<f64>, Kind)>> {
        let mut out = Vec::new();
        for (name, e) in &self.entities {
            let ctx = || format!("entity '{name}'");
            let (mv, kind) = match e {
                Entity::Point(c) => (pga.point(c).with_context(ctx)?.into_mv(), Kind::Point),
                Entity::Plane(c) => {
                    let p = pga.plane(c).with_context(ctx)?;
                    (
                        pga.normalize(p.mv()).with_context(ctx)?.into_mv(),
                        if pga.n() == 2 { Kind::Line } else { Kind::Plane },
                    )
                }
                Entity::Line(l) => {
                    let raw = match (&l.points, &l.planes) {
                        (Some([a, b]), None) => pga.line_from_points(pga.point(a)?.mv(), pga.point(b)?.mv()),
                        (None, Some([a, b])) => pga.line_from_planes(pga.plane(a)?.mv(), pga.plane(b)?.mv()),
                        _ => bail!("entity '{name}': a line needs exactly one of \"points\" or \"planes\""),
                    }
                    .with_context(ctx)?;
                    (pga.normalize(raw.mv()).with_context(ctx)?.into_mv(), Kind::Line)
                }
                Entity::Multivector(text) => (Multivector::parse(pga.algebra(), text).with_context(ctx)?, Kind::Other),
            };
            out.push((name.clone(), mv, kind));
        }
        Ok(out)
    }
}

/// Geometric role of an entity, for diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Point,
    Line,
    Plane,
    Other,
}

impl DynamicsConfig {
    pub fn build(&self, pga: &Pga) -> Result<(BodyState<f64>, InertiaOperator<f64>)> {
        if pga.n() != 3 {
            bail!("dynamics requires n = 3");
        }
        let alg = pga.algebra();
        let inertia = InertiaOperator::new(alg, self.moments, self.mass)?;
        let mut state = BodyState::at_rest_pose(alg, self.momentum)?;
        if let Some(p) = &self.pose {
            let screw =
                ScrewGenerator::from_point_direction(pga, &p.axis_point, &p.axis_direction, p.angle, p.displacement)
                    .context("dynamics.pose")?;
            state.g = screw.exp()?.into_mv();
        }
        Ok((state, inertia))
    }
}
