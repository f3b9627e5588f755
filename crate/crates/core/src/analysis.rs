//! Full pipeline: curvature, spectrum, irreducible system, V- and Z-decompositions.

use std::str::FromStr;

use crate::algebra::MetricLieAlgebra;
use crate::curvature::{
    check_locally_symmetric, curvature_tensor, divergence_weyl, is_conformally_flat, levi_civita,
    ConnectionTable, CurvatureData, SymmetryReport, WeylDivergence,
};
use crate::decomposition::{
    curvature_span, irreducible_eigen_system, v_decomposition, verify_v_relations, z_decomposition,
    CurvatureSpan, HPair, SubspaceDecomposition, VRelation,
};
use crate::error::{Error, Result};
use crate::spectrum::{curvature_operator_matrix, spectrum, SpectralDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Curvature,
    Spectrum,
    VDecomp,
    ZDecomp,
    All,
}

impl FromStr for Stage {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "curvature" => Ok(Stage::Curvature),
            "spectrum" => Ok(Stage::Spectrum),
            "vdecomp" => Ok(Stage::VDecomp),
            "zdecomp" => Ok(Stage::ZDecomp),
            "all" => Ok(Stage::All),
            other => Err(Error::Parse(format!("unknown stage {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub algebra: MetricLieAlgebra,
    pub connection: ConnectionTable,
    pub curvature: CurvatureData,
    pub symmetry: SymmetryReport,
    /// Absent below dimension 3.
    pub conformally_flat: Option<bool>,
    /// Absent below dimension 4.
    pub weyl_divergence: Option<WeylDivergence>,
    pub spectrum: Option<SpectralDecomposition>,
    pub curvature_span: Option<CurvatureSpan>,
    pub eigen_system: Option<std::result::Result<Vec<HPair>, Error>>,
    pub v: Option<SubspaceDecomposition>,
    pub v_relations: Option<Vec<VRelation>>,
    /// `Err` when the Z-parts overlap or no V-decomposition exists.
    pub z: Option<std::result::Result<SubspaceDecomposition, Error>>,
}

impl Analysis {
    pub fn run(alg: &MetricLieAlgebra, stage: Stage) -> Analysis {
        let connection = levi_civita(alg);
        let curvature = curvature_tensor(alg, &connection);
        let symmetry = check_locally_symmetric(alg, &connection, &curvature);
        let conformally_flat = is_conformally_flat(&curvature).ok();
        let weyl_divergence = divergence_weyl(alg, &connection, &curvature).ok();
        let mut out = Analysis {
            algebra: alg.clone(),
            connection,
            curvature,
            symmetry,
            conformally_flat,
            weyl_divergence,
            spectrum: None,
            curvature_span: None,
            eigen_system: None,
            v: None,
            v_relations: None,
            z: None,
        };
        if stage < Stage::Spectrum {
            return out;
        }
        let spec = spectrum(&curvature_operator_matrix(&out.curvature));
        out.curvature_span = Some(curvature_span(&out.curvature));
        if stage >= Stage::VDecomp {
            let system = irreducible_eigen_system(&spec);
            if let Ok(pairs) = &system {
                let v = v_decomposition(alg, pairs);
                out.v_relations = verify_v_relations(alg, &out.connection, &v).ok();
                if stage >= Stage::ZDecomp {
                    out.z = Some(z_decomposition(alg, &out.connection, &v));
                }
                out.v = Some(v);
            }
            out.eigen_system = Some(system);
        }
        out.spectrum = Some(spec);
        out
    }

    pub fn is_c_space(&self) -> Option<bool> {
        self.weyl_divergence.as_ref().map(|d| d.is_c_space)
    }

    pub fn v_exists(&self) -> Option<bool> {
        self.v.as_ref().map(|v| v.exists)
    }

    /// Whether a nontrivial Z-decomposition exists; `None` if not computed
    /// or undecided.
    pub fn z_exists(&self) -> Option<bool> {
        if let Some(Err(Error::AmbiguousIrreducibility { .. })) = &self.eigen_system {
            return None;
        }
        match &self.z {
            Some(Ok(z)) => Some(z.exists),
            Some(Err(Error::NoVDecomposition | Error::NonOrthogonalZ { .. })) => Some(false),
            Some(Err(_)) => None,
            None => None,
        }
    }

    /// The ambiguity error, if irreducibility could not be decided.
    pub fn ambiguity(&self) -> Option<&Error> {
        match &self.eigen_system {
            Some(Err(e @ Error::AmbiguousIrreducibility { .. })) => Some(e),
            _ => None,
        }
    }
}

pub fn analyze(alg: &MetricLieAlgebra) -> Analysis {
    Analysis::run(alg, Stage::All)
}
