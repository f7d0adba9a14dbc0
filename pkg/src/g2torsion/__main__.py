from g2torsion.report.cli import main

raise SystemExit(main())
