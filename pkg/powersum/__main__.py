from powersum.cli import main

main()
