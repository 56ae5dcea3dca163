"""Monte Carlo engine: seeded streams, replication fan-out, summaries, persistence."""
