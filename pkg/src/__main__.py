import wordram.bench_cli as bench_cli

bench_cli.cli(prog_name="WordRAM_Bench")
