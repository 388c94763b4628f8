//! Random retention: each surviving interval keeps positions 1 and 3 with
//! probability p, compared with the predicted dimension log(2p)/log 4.

use fraczeta::stochastic::{expected_dimension, run_trials, RetentionConfig};

fn main() -> fraczeta::Result<()> {
    for p in [0.3, 0.5, 0.6, 0.75, 0.9, 1.0] {
        let report = run_trials(&RetentionConfig::uniform(p, 12, 500, 2024))?;
        let a = &report.aggregate;
        let predicted = expected_dimension(p)?;
        println!(
            "p = {p:<4} predicted {:>8.5}{}  extinction {:.3}  mean dim {}",
            predicted.value,
            if predicted.subcritical {
                " (subcritical)"
            } else {
                ""
            },
            a.extinction_rate,
            a.mean_dim.map_or("-".to_string(), |m| format!(
                "{m:.5} +- {:.5}",
                a.std_dim.unwrap_or(0.0)
            ))
        );
    }
    let biased = run_trials(&RetentionConfig::biased(0.95, 1.0, 12, 500, 2024))?;
    println!(
        "bias (0.95, 1.0): predicted {:.5}, mean dim {:.5}",
        biased.aggregate.predicted_dim,
        biased.aggregate.mean_dim.unwrap_or(f64::NAN)
    );
    Ok(())
}
