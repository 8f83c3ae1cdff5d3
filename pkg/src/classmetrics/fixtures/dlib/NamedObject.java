package dlib;

public class NamedObject extends BaseObject
{
    private String name;

    NamedObject (String name)
    {
        this.name = name;
    }

    public String getName ()
    {
        return( name );
    }

    public boolean matches (String other)
    {
        if (other == null)
        {
            return( false );
        }
        return( name.equals(other) );
    }
}
