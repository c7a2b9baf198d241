print("infra fixture")
