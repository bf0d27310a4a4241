// SPDX-License-Identifier: Apache-2.0

fn main() {
    let code = sqcolor::cli::run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
