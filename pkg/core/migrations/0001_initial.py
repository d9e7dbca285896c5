# Generated by Django 5.2 on 2026-10-19 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='StoredCertificate',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('relation', models.CharField(choices=[('h', 'Head reduction'), ('be', 'Beta-eta reduction'), ('hp', 'Multi-head reduction')], max_length=2)),
                ('source', models.CharField(max_length=500)),
                ('target', models.CharField(max_length=500)),
                ('strength', models.CharField(max_length=20)),
                ('kind', models.CharField(choices=[('substitution', 'Substitution'), ('term', 'Reducing term'), ('family', 'Substitution family')], max_length=20)),
                ('document', models.JSONField()),
                ('verified', models.BooleanField(default=False)),
                ('samples_tested', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['relation', 'source', 'target'], name='core_cert_lookup_idx')],
            },
        ),
    ]
