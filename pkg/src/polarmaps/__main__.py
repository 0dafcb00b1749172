from src.polarmaps.main import cli

cli()
