from cubicsieve.cli import main

raise SystemExit(main())
