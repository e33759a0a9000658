use std::f64::consts::PI;

use catwva::wigner_dist::{decompose, negativity_volume, sample_grid, WignerField};
use catwva::{cat_state, coherent_state, BlochAngles, ProtocolParams, SpinJ};
use clap::Args;

use crate::error::CliResult;
use crate::output::{ensure_dir, write_table, Cell, Meta, Table};
use crate::Common;

#[derive(Debug, Args)]
pub struct WignerArgs {
    #[command(flatten)]
    pub common: Common,

    /// Number of atoms N = 2j.
    #[arg(long, default_value_t = 10)]
    pub n: u32,

    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub omega: String,

    /// A single post-selection angle.
    #[arg(long, conflicts_with = "gamma_list", allow_hyphen_values = true)]
    pub gamma: Option<String>,

    /// Comma-separated post-selection angles [default: pi/2,pi/30,pi/60,pi/100,0].
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_list: Option<String>,

    /// Gauss-Legendre nodes in cos(alpha).
    #[arg(long, default_value_t = 64)]
    pub n_alpha: usize,

    /// Uniform nodes in beta.
    #[arg(long, default_value_t = 128)]
    pub n_beta: usize,

    /// Skip the reference panel of the initial coherent state.
    #[arg(long)]
    pub no_coherent: bool,
}

const DEFAULT_GAMMAS: [f64; 5] = [PI / 2.0, PI / 30.0, PI / 60.0, PI / 100.0, 0.0];

struct Panel {
    label: String,
    gamma: f64,
    p: f64,
    field: WignerField,
}

pub fn run(args: &WignerArgs) -> CliResult<()> {
    let c = &args.common;
    let omega = c.angle(&args.omega, "omega")?;
    let gammas = match (&args.gamma, &args.gamma_list) {
        (Some(g), _) => vec![c.angle(g, "gamma")?],
        (None, Some(l)) => c.angle_list(l, "gamma-list")?,
        (None, None) => DEFAULT_GAMMAS.to_vec(),
    };

    let mut panels = Vec::new();
    for (i, &gamma) in gammas.iter().enumerate() {
        let params = ProtocolParams::equatorial(args.n, omega, gamma)?;
        let cat = cat_state(&params)?;
        let field = sample_grid(&decompose(&cat.vector)?, args.n_alpha, args.n_beta)?;
        panels.push(Panel { label: format!("g{i}"), gamma, p: cat.success_prob, field });
    }
    if !args.no_coherent {
        let initial = coherent_state(SpinJ::from_atoms(args.n)?, BlochAngles::equator(0.0));
        let field = sample_grid(&decompose(&initial)?, args.n_alpha, args.n_beta)?;
        panels.push(Panel { label: "coherent".into(), gamma: f64::NAN, p: 1.0, field });
    }

    ensure_dir(&c.out)?;
    let mut base = Meta::new("wigner");
    base.push("N", args.n).num("omega", omega);
    base.push("grid", format!("{} x {} (Gauss-Legendre in cos alpha, uniform in beta)", args.n_alpha, args.n_beta));

    let mut summary = Table::new(&["state", "gamma", "p", "min_W", "max_W", "negativity_volume", "integral"]);
    for panel in &panels {
        let mut meta = base.with("state", &panel.label);
        if panel.label == "coherent" {
            meta.push("gamma", "none (initial coherent state)");
        } else {
            meta.num("gamma", panel.gamma).num("p", panel.p);
        }
        let mut t = Table::new(&["alpha", "beta", "W"]);
        for (a, b, w) in panel.field.triples() {
            t.push(vec![a.into(), b.into(), w.into()]);
        }
        let path = write_table(&c.out, &format!("wigner_N{}_{}", args.n, panel.label), &meta, &t, c.format)?;

        let (min, vol, integral) = (panel.field.min(), negativity_volume(&panel.field), panel.field.integral());
        summary.push(vec![
            Cell::from(panel.label.as_str()),
            panel.gamma.into(),
            panel.p.into(),
            min.into(),
            panel.field.max().into(),
            vol.into(),
            integral.into(),
        ]);
        println!(
            "{:>9}  gamma={:<10.6} min W={:+.6e}  negativity={:.6e}  integral={:.12}  -> {}",
            panel.label,
            panel.gamma,
            min,
            vol,
            integral,
            path.display()
        );
    }
    let path = write_table(&c.out, &format!("wigner_N{}_summary", args.n), &base, &summary, c.format)?;
    println!("summary -> {}", path.display());
    Ok(())
}
