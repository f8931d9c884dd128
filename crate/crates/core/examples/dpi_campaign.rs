//! A small randomized data-processing campaign per channel family, the CSV
//! it produces and its summary.

use modlp::campaign::{run_campaign, CampaignConfig, ChannelFamily};

fn main() -> modlp::Result<()> {
    for family in ChannelFamily::ALL {
        let cfg = CampaignConfig {
            seed: 2024,
            trials: 20,
            dims: vec![2, 3],
            alpha_grid: vec![0.5, 0.75, 1.5, 2.0, f64::INFINITY],
            channel_family: family,
            tolerances: Default::default(),
        };
        let report = run_campaign(&cfg)?;
        let sufficient = report.rows.iter().filter(|r| r.sufficient).count() / cfg.alpha_grid.len();
        println!(
            "{:<20} rows {:>3}  sufficient trials {:>2}/{}  min gap {:.3e}  violations {}",
            family.as_str(),
            report.rows.len(),
            sufficient,
            cfg.trials,
            report.min_gap(),
            report.violations()
        );
        if family == ChannelFamily::RandomStinespring {
            for line in report.to_csv().lines().take(3) {
                println!("    {line}");
            }
        }
    }
    Ok(())
}
