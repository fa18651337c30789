//! Certificates: serialize, reload, verify, tamper.

use wdwalk::scenario::json::{certificate_from_json, certificate_to_json};
use wdwalk::scenario::Scenario;
use wdwalk::walk::{unobstruct, verify_certificate, WalkConfig};

fn main() -> wdwalk::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios/obstructed_gl3.json");
    let d = Scenario::load(path)?.triple;
    let cert = unobstruct(&d, &WalkConfig::default())?.certificate;

    let text = serde_json::to_string_pretty(&certificate_to_json(&cert, Some("obstructed-gl3")))?;
    println!("certificate is {} bytes of JSON", text.len());
    let reloaded = certificate_from_json(&serde_json::from_str(&text)?)?;
    let report = verify_certificate(&reloaded);
    println!("reloaded certificate valid: {} ({} checks)", report.valid, report.checks);

    let mut tampered = reloaded;
    tampered.final_phi = d.phi.clone();
    let report = verify_certificate(&tampered);
    println!("tampered certificate valid: {}, failure: {:?}", report.valid, report.failure);
    Ok(())
}
