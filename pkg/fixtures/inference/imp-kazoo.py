import kazoo.client

client = kazoo.client.KazooClient()
print(client)
