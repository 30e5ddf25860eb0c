"""Election control under top-r approval of ranked ballots on k-peaked profiles."""
