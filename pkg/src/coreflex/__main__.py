from coreflex.cli import main

main()
