//! Build a run artifact in memory, write it, read it back and verify it:
//! what `qsp solve` followed by `qsp verify` does.
//!
//! cargo run --example cli_artifact

use qsp_fpi::cli::{solve_target, verify_artifact, RunArtifact, TargetSpec};
use qsp_fpi::SolverConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: TargetSpec = serde_json::from_str(r#"{"kind": "jacobi-anger-odd", "tau": 40}"#)?;
    let artifact = solve_target(&spec, &SolverConfig::default())?;

    let path = std::env::temp_dir().join("qsp_artifact_example.json");
    std::fs::write(&path, artifact.to_json())?;
    let back = RunArtifact::read(&path)?;
    let v = verify_artifact(&back)?;
    println!("wrote {}", path.display());
    println!("iterations: {}, converged: {}", back.iterations, back.converged);
    println!("max pointwise error: {:.3e}", v.max_pointwise_error);
    println!("residual: {:.3e}", v.residual);
    Ok(())
}
