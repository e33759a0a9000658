use std::f64::consts::{FRAC_PI_2, PI};

use catwva::phase_dist::phase_profile;
use catwva::ProtocolParams;
use clap::Args;

use super::parse_atoms;
use crate::error::{CliError, CliResult};
use crate::output::{ensure_dir, write_table, Meta, Table};
use crate::Common;

#[derive(Debug, Args)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub common: Common,

    /// Comma-separated atom numbers; one file per entry.
    #[arg(long, default_value = "10,100")]
    pub n: String,

    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub omega: String,

    #[arg(long, conflicts_with = "gamma_list", allow_hyphen_values = true)]
    pub gamma: Option<String>,

    /// Comma-separated post-selection angles [default: pi/2,pi/30,pi/60,pi/100,0].
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_list: Option<String>,

    /// Samples of phi across the window.
    #[arg(long, default_value_t = 2001)]
    pub n_phi: usize,

    #[arg(long, default_value = "-pi/2", allow_hyphen_values = true)]
    pub phi_min: String,

    #[arg(long, default_value = "pi/2", allow_hyphen_values = true)]
    pub phi_max: String,
}

const DEFAULT_GAMMAS: [f64; 5] = [FRAC_PI_2, PI / 30.0, PI / 60.0, PI / 100.0, 0.0];

pub fn run(args: &PhaseArgs) -> CliResult<()> {
    let c = &args.common;
    let atoms = parse_atoms(&args.n)?;
    let omega = c.angle(&args.omega, "omega")?;
    let gammas = match (&args.gamma, &args.gamma_list) {
        (Some(g), _) => vec![c.angle(g, "gamma")?],
        (None, Some(l)) => c.angle_list(l, "gamma-list")?,
        (None, None) => DEFAULT_GAMMAS.to_vec(),
    };
    let window = (c.angle(&args.phi_min, "phi-min")?, c.angle(&args.phi_max, "phi-max")?);
    if args.n_phi < 2 {
        return Err(CliError::Param(format!("--n-phi must be at least 2, got {}", args.n_phi)));
    }

    let mut tables = Vec::new();
    for &n in &atoms {
        let mut t = Table::new(&["gamma", "phi", "P"]);
        for &gamma in &gammas {
            let prof = phase_profile(&ProtocolParams::equatorial(n, omega, gamma)?, window, args.n_phi)?;
            for (&phi, &v) in prof.phis.iter().zip(&prof.values) {
                t.push(vec![gamma.into(), phi.into(), v.into()]);
            }
        }
        tables.push((n, t));
    }

    ensure_dir(&c.out)?;
    for (n, t) in &tables {
        let mut meta = Meta::new("phase");
        meta.push("N", n).num("omega", omega);
        meta.push("gamma", gammas.iter().map(|g| crate::output::fmt_num(*g)).collect::<Vec<_>>().join(" "));
        meta.num("phi_min", window.0).num("phi_max", window.1).push("n_phi", args.n_phi);
        let path = write_table(&c.out, &format!("phase_N{n}"), &meta, t, c.format)?;
        println!("N={n}: {} angles x {} samples -> {}", gammas.len(), args.n_phi, path.display());
    }
    Ok(())
}
