//! Writing and reading matrix files, with a bit-exact round trip.

use modlp::io::MatrixFile;
use modlp::random::random_state;
use modlp::KrausChannel;

fn main() -> modlp::Result<()> {
    let dir = std::env::temp_dir().join(format!("modlp-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| modlp::Error::InvalidInput(e.to_string()))?;

    let state = MatrixFile::state(&random_state(2, 71));
    let channel = MatrixFile::channel(&KrausChannel::amplitude_damping(0.25)?);
    let state_path = dir.join("psi.json");
    let channel_path = dir.join("damping.json");
    state.write(&state_path)?;
    channel.write(&channel_path)?;

    println!("{}", std::fs::read_to_string(&state_path).unwrap_or_default().trim());
    let back = MatrixFile::read(&state_path)?;
    println!("state round trip exact: {}", back == state);
    let ch = MatrixFile::read(&channel_path)?.to_channel()?;
    println!("channel {} -> {} with {} Kraus operators", ch.d_in(), ch.d_out(), ch.kraus_ops().len());

    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
