//! The chain game on 2j players, won by any pair {2i, 2i+1}, admits a
//! j-trade built from the shifted pairs {2i+1, 2i+2}.

use simple_trade::convert::convert;
use simple_trade::trade::decide_j_trade;
use simple_trade::{verify, Coalition, GameRep, Limits, RepKind};

fn main() -> simple_trade::Result<()> {
    let limits = Limits::default();
    for j in 2..=4 {
        let wm = (0..j)
            .map(|i| Coalition::from_players([2 * i, 2 * i + 1]))
            .collect();
        let rep = GameRep::new(2 * j, RepKind::Wm, wm)?;
        for k in 1..=j {
            let answer = decide_j_trade(&rep, k, None, &limits)?;
            print!("j={j} k={k}: ");
            match &answer.application {
                Some(app) => println!(
                    "trade {:?} -> {:?} (verified {})",
                    app.losing_side(),
                    app.winning_side(),
                    verify(&rep, app)
                ),
                None => println!("none"),
            }
        }
        let w = convert(&rep, RepKind::W, limits.oracle_cap)?;
        println!(
            "j={j} from the full winning list: {}",
            decide_j_trade(&w, j, None, &limits)?.is_yes()
        );
    }
    Ok(())
}
